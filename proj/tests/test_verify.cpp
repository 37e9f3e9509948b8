#include "rtex/constructions.hpp"
#include "rtex/verify.hpp"

#include <doctest.h>

using namespace rtex;

TEST_CASE("the full battery passes") {
    VerifyReport r = run_verify("all");
    for (const auto& c : r.checks)
        CHECK_MESSAGE(c.ok, c.suite, ": ", c.name, " ", c.detail);
    CHECK(r.ok());
    CHECK(r.checks.size() > 50);
}

TEST_CASE("a broken Andrasfai generator is caught") {
    VerifyHooks hooks = VerifyHooks::standard();
    // Off by one in the upper end of the distance window.
    hooks.andrasfai = [](int k) {
        const int n = 3 * k - 1;
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (j - i >= k && j - i <= 2 * k)
                    g.add_edge(i, j);
        return g;
    };
    VerifyReport r = run_verify("facts", hooks);
    CHECK_FALSE(r.ok());
    CHECK(r.failures() > 0);
    r = run_verify("families", hooks);
    CHECK_FALSE(r.ok());
}

TEST_CASE("a broken Vega generator is caught") {
    VerifyHooks hooks = VerifyHooks::standard();
    // Drops the edge between x and y.
    hooks.vega_base = [](int i) {
        Graph g = vega_base(i);
        Graph h(g.order());
        for (auto [u, v] : g.edges())
            if (!(u == vega_slot::x && v == vega_slot::y))
                h.add_edge(u, v);
        std::vector<std::string> labels;
        for (int v = 0; v < g.order(); ++v)
            labels.push_back(g.label(v));
        h.set_labels(labels);
        return h;
    };
    VerifyReport r = run_verify("facts", hooks);
    CHECK_FALSE(r.ok());
}

TEST_CASE("unknown suite") {
    CHECK_THROWS(run_verify("nope"));
}
