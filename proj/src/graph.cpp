#include "rtex/graph.hpp"

#include "rtex/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace rtex {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kCapacity)
        throw CapacityExceeded("graph order " + std::to_string(n) + " outside [0, " +
                               std::to_string(kCapacity) + "]");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

std::int64_t Graph::edge_count() const {
    std::int64_t twice = 0;
    for (const auto& row : adj_)
        twice += row.count();
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw OutOfRange("edge endpoint out of range");
    if (u == v)
        throw MalformedInput("loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw OutOfRange("edge endpoint out of range");
    adj_[u].reset(v);
    adj_[v].reset(u);
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v)
        d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0)
        return std::nullopt;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d)
            return std::nullopt;
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::induced(std::span<const int> keep) const {
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (has_labels()) {
        std::vector<std::string> lab;
        lab.reserve(keep.size());
        for (int v : keep)
            lab.push_back(labels_[v]);
        h.labels_ = std::move(lab);
    }
    return h;
}

Graph Graph::without_vertex(int v) const {
    const int drop[] = {v};
    return without_vertices(drop);
}

Graph Graph::without_vertices(std::span<const int> drop) const {
    std::vector<bool> gone(static_cast<std::size_t>(n_), false);
    for (int v : drop)
        gone.at(static_cast<std::size_t>(v)) = true;
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (!gone[v])
            keep.push_back(v);
    return induced(keep);
}

Graph Graph::permuted(std::span<const int> order) const {
    if (static_cast<int>(order.size()) != n_)
        throw BadParams("permutation length does not match graph order");
    return induced(order);
}

int Graph::add_vertex(const VertexSet& nbrs) {
    if (n_ == kCapacity)
        throw CapacityExceeded("cannot add vertex beyond capacity");
    int v = n_++;
    adj_.emplace_back();
    nbrs.for_each([&](int u) {
        if (u >= v)
            throw OutOfRange("neighbor index out of range");
        adj_[v].set(u);
        adj_[u].set(v);
    });
    if (has_labels())
        labels_.push_back(std::to_string(v));
    return v;
}

std::string Graph::label(int v) const {
    return has_labels() ? labels_[v] : std::to_string(v);
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_)
        throw BadParams("label count does not match graph order");
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw BadParams("vertex labels must be unique");
    labels_ = std::move(labels);
}

std::optional<int> Graph::find_label(std::string_view label) const {
    for (int v = 0; v < n_; ++v)
        if (labels_.empty() ? std::to_string(v) == label : labels_[v] == label)
            return v;
    return std::nullopt;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(std::string_view line) {
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.empty())
        throw MalformedInput("empty graph6 line");
    auto sextet = [&](std::size_t pos) {
        if (pos >= line.size())
            throw MalformedInput("graph6 header truncated");
        int c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126)
            throw MalformedInput("graph6 byte out of range at position " + std::to_string(pos));
        return c - 63;
    };
    std::size_t pos = 0;
    long n = 0;
    if (line[0] != '~') {
        n = sextet(0);
        pos = 1;
    } else if (line.size() > 1 && line[1] == '~') {
        for (std::size_t k = 2; k < 8; ++k)
            n = (n << 6) | sextet(k);
        pos = 8;
    } else {
        for (std::size_t k = 1; k < 4; ++k)
            n = (n << 6) | sextet(k);
        pos = 4;
        if (n < 63)
            throw MalformedInput("graph6 extended header used for n < 63");
    }
    if (n > kCapacity)
        throw CapacityExceeded("graph6 order " + std::to_string(n) + " exceeds capacity");
    const long bits = n * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() != expected)
        throw MalformedInput("graph6 body has length " + std::to_string(line.size() - pos) +
                             ", expected " + std::to_string(expected - pos));
    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = sextet(pos + static_cast<std::size_t>(bit / 6));
            if ((byte >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        int last = sextet(expected - 1);
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw MalformedInput("graph6 padding bits are not zero");
    }
    return g;
}

} // namespace rtex
