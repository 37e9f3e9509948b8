#include "rtex/canonical.hpp"
#include "rtex/constructions.hpp"
#include "rtex/error.hpp"
#include "rtex/families.hpp"
#include "rtex/invariants.hpp"
#include "rtex/optimizer.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace rtex;

namespace {

struct Brute {
    std::optional<std::int64_t> best;
    std::set<std::string> witnesses;  // canonical forms of optimal blow-ups
};

/// Tries every weighting with sum n; alpha by scanning all independent
/// subsets of the base.
Brute brute_max(const Graph& base, std::int64_t n, std::int64_t s, std::int64_t min_weight) {
    const int r = base.order();
    auto rows = oracle::rows(base);
    std::vector<std::uint32_t> indep;
    for (std::uint32_t S = 0; S < (1U << r); ++S) {
        bool ok = true;
        for (int v = 0; v < r && ok; ++v)
            if ((S >> v & 1U) && (rows[v] & S))
                ok = false;
        if (ok)
            indep.push_back(S);
    }
    Brute out;
    std::vector<std::int64_t> w(static_cast<std::size_t>(r), 0);
    std::function<void(int, std::int64_t)> rec = [&](int v, std::int64_t left) {
        if (v == r - 1) {
            if (left < min_weight)
                return;
            w[v] = left;
            for (auto S : indep) {
                std::int64_t sum = 0;
                for (int u = 0; u < r; ++u)
                    if (S >> u & 1U)
                        sum += w[u];
                if (sum > s)
                    return;
            }
            const std::int64_t e = oracle::blowup_edges_direct(base, w);
            if (!out.best || e > *out.best) {
                out.best = e;
                out.witnesses.clear();
            }
            if (e == *out.best)
                out.witnesses.insert(canonical_form(blow_up(WeightVector(base, w))));
            return;
        }
        for (std::int64_t x = min_weight; x <= left; ++x) {
            w[v] = x;
            rec(v + 1, left - x);
        }
    };
    rec(0, n);
    return out;
}

std::set<std::string> report_forms(const SearchReport& r) {
    std::set<std::string> out;
    for (const auto& w : r.witnesses)
        out.insert(canonical_form(from_graph6(w.graph6)));
    return out;
}

} // namespace

TEST_CASE("optimizer examples") {
    SearchReport r = max_blowup_edges(andrasfai(2), 9, 4);
    REQUIRE(r.optimum == 17);
    CHECK(r.witnesses.size() == 2);
    std::set<std::string> family;
    for (const auto& m : family_G(9, 4, 2))
        family.insert(m.canonical);
    CHECK(report_forms(r) == family);
    CHECK(r.mode == "blowup");

    r = max_blowup_edges(andrasfai(3), 16, 6);
    REQUIRE(r.optimum == 48);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].weights == std::vector<std::int64_t>(8, 2));
}

TEST_CASE("optimizer on the Groetzsch graph") {
    OptimizerOptions opts;
    opts.threads = 0;
    SearchReport r = max_blowup_edges(vega(2, 1, 1), 29, 10, opts);
    REQUIRE(r.optimum == 145);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(isomorphic(from_graph6(r.witnesses[0].graph6), vega_regular_blowup(2, 1, 1)));
    CHECK(r.witnesses[0].base_graph6 == to_graph6(vega(2, 1, 1)));
}

TEST_CASE("optimizer agrees with exhaustive weightings") {
    std::vector<Graph> bases{andrasfai(2), path_graph(4), cycle_graph(6), complete_bipartite(2, 3),
                             andrasfai(3), cycle_graph(7)};
    std::mt19937_64 rng(31);
    for (int t = 0; t < 6; ++t)
        bases.push_back(oracle::random_triangle_free(4 + t % 3, 0.8, rng));
    for (const auto& base : bases)
        for (std::int64_t n = 1; n <= (base.order() <= 5 ? 13 : 9); ++n)
            for (std::int64_t s = 1; s <= n; ++s)
                for (std::int64_t mw : {0, 1}) {
                    Brute b = brute_max(base, n, s, mw);
                    OptimizerOptions opts;
                    opts.min_weight = mw;
                    if (!b.best) {
                        REQUIRE_THROWS_AS(max_blowup_edges(base, n, s, opts), Infeasible);
                        continue;
                    }
                    SearchReport r = max_blowup_edges(base, n, s, opts);
                    INFO("base ", to_graph6(base), " n=", n, " s=", s, " min=", mw);
                    REQUIRE(r.optimum == b.best);
                    REQUIRE(report_forms(r) == b.witnesses);
                    for (const auto& w : r.witnesses) {
                        Graph g = from_graph6(w.graph6);
                        REQUIRE(g.order() == n);
                        REQUIRE(g.edge_count() == *b.best);
                        REQUIRE(oracle::alpha(g) <= s);
                    }
                }
}

TEST_CASE("thread count does not change the answer") {
    for (std::int64_t n = 10; n <= 22; n += 3)
        for (std::int64_t s = (3 * n + 7) / 8; s <= n / 2; ++s) {
            OptimizerOptions one, many;
            many.threads = 4;
            SearchReport a = max_blowup_edges(andrasfai(3), n, s, one);
            SearchReport b = max_blowup_edges(andrasfai(3), n, s, many);
            REQUIRE(a.optimum == b.optimum);
            REQUIRE(a.witnesses.size() == b.witnesses.size());
            for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
                REQUIRE(a.witnesses[i].canonical == b.witnesses[i].canonical);
                REQUIRE(a.witnesses[i].weights == b.witnesses[i].weights);
            }
        }
}

TEST_CASE("optimizer errors") {
    CHECK_THROWS_AS(max_blowup_edges(complete_graph(3), 6, 3), NotTriangleFree);
    CHECK_THROWS_AS(max_blowup_edges(Graph(0), 6, 3), BadParams);
    CHECK_THROWS_AS(max_blowup_edges(andrasfai(2), 10, 1), Infeasible);
    OptimizerOptions tiny;
    tiny.node_budget = 10;
    CHECK_THROWS_AS(max_blowup_edges(andrasfai(4), 40, 15, tiny), ResourceLimit);
}

TEST_CASE("report JSON") {
    SearchReport r = max_blowup_edges(andrasfai(2), 9, 4);
    auto j = r.to_json();
    CHECK(j["optimum"] == 17);
    CHECK(j["witness_graph6"].size() == 2);
    CHECK(j["witnesses"][0]["weights"].size() == 5);
    CHECK(j["mode"] == "blowup");
}
