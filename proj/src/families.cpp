#include "rtex/families.hpp"

#include "rtex/canonical.hpp"
#include "rtex/constructions.hpp"
#include "rtex/error.hpp"
#include "rtex/extremal.hpp"
#include "rtex/invariants.hpp"

#include <algorithm>
#include <set>

namespace rtex {

namespace {

FamilyMember make_member(WeightVector w, FamilyParams params, std::int64_t n, std::int64_t s) {
    FamilyMember m;
    m.edges = blowup_edge_count(w);
    m.edge_check_ok = Rational(m.edges) == g_k(n, s, params.k);
    m.canonical = weighted_canonical_form(w.base(), w.weights());
    m.weights = std::move(w);
    m.params = std::move(params);
    m.n = n;
    m.s = s;
    return m;
}

void push_unique(std::vector<FamilyMember>& out, std::set<std::string>& seen, FamilyMember m) {
    if (seen.insert(m.canonical).second)
        out.push_back(std::move(m));
}

} // namespace

std::vector<FamilyMember> family_G(std::int64_t n, std::int64_t s, int k) {
    std::vector<FamilyMember> out;
    if (n < 1 || !in_family_window(n, s, k))
        return out;
    const auto [lo, hi] = class_size_bounds(n, s, k);
    const Graph base = andrasfai(k);
    std::set<std::string> seen;
    for (std::int64_t a = lo; 2 * a <= lo + hi; ++a) {
        const std::int64_t b = lo + hi - a;
        std::vector<std::int64_t> w(static_cast<std::size_t>(base.order()), hi);
        w[0] = w[k] = lo;
        w[2 * k - 1] = a;
        w[2 * k] = b;
        FamilyParams p;
        p.family = 'G';
        p.k = k;
        p.a = a;
        p.b = b;
        push_unique(out, seen, make_member(WeightVector(base, std::move(w)), p, n, s));
    }
    return out;
}

std::vector<FamilyMember> family_H(std::int64_t n, std::int64_t s, int k,
                                   std::vector<std::string>* diagnostics) {
    std::vector<FamilyMember> out;
    if (k < 10 || n < 1 || !in_family_window(n, s, k))
        return out;
    const std::int64_t scale = 3 * s - n;
    const std::int64_t lam = lambda(n, s, k);
    std::set<std::string> seen;

    auto admit = [&](int mu, int nu, char clause) {
        if ((k + 6 + mu + nu) % 9 != 0)
            return;
        const int i = (k + 6 + mu + nu) / 9;
        if (i < 2)
            return;
        WeightVector w = omega(i, mu, nu);
        w *= scale;
        if (clause == 'b')
            w -= lam * vega_f(i);
        else if (clause == 'c')
            w -= lam * vega_g(i);
        FamilyParams p;
        p.family = 'H';
        p.k = k;
        p.i = i;
        p.mu = mu;
        p.nu = nu;
        p.clause = clause;
        if (!w.nonnegative()) {
            if (diagnostics)
                diagnostics->push_back("skipped clause (" + std::string(1, clause) + ") i=" +
                                       std::to_string(i) + " mu=" + std::to_string(mu) +
                                       " nu=" + std::to_string(nu) + ": negative class size");
            return;
        }
        push_unique(out, seen, make_member(std::move(w), p, n, s));
    };

    if (lam == 0) {
        for (int mu : {0, 1})
            for (int nu : {0, 1})
                admit(mu, nu, 'a');
    } else {
        for (int nu : {0, 1})
            admit(0, nu, 'b');
        for (int mu : {0, 1})
            admit(mu, 0, 'c');
    }
    return out;
}

Classification classify_extremal(const Graph& g, std::int64_t n, std::int64_t s) {
    Classification out;
    if (g.order() != n) {
        out.reason = "graph has " + std::to_string(g.order()) + " vertices, expected " +
                     std::to_string(n);
        return out;
    }
    if (!is_triangle_free(g)) {
        out.reason = "graph contains a triangle";
        return out;
    }
    const int alpha = independence_number(g);
    if (alpha > s) {
        out.reason = "independence number " + std::to_string(alpha) + " exceeds s=" +
                     std::to_string(s);
        return out;
    }
    const std::string form = canonical_form(g);
    bool any_window = false;
    for (int k = 2; k <= 3 * n + 1; ++k) {
        if (!in_family_window(n, s, k))
            continue;
        any_window = true;
        for (auto& m : family_G(n, s, k))
            if (m.canonical == form) {
                out.kind = Classification::Kind::G;
                out.match = std::move(m);
                return out;
            }
        for (auto& m : family_H(n, s, k))
            if (m.canonical == form) {
                out.kind = Classification::Kind::H;
                out.match = std::move(m);
                return out;
            }
    }
    out.reason = any_window ? "no family member is isomorphic to the graph"
                            : "s/n lies in no family window";
    return out;
}

std::string to_string(Classification::Kind kind) {
    switch (kind) {
    case Classification::Kind::G:
        return "G";
    case Classification::Kind::H:
        return "H";
    default:
        return "neither";
    }
}

} // namespace rtex
