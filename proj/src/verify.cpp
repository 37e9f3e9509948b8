#include "rtex/verify.hpp"

#include "rtex/blowup.hpp"
#include "rtex/canonical.hpp"
#include "rtex/constructions.hpp"
#include "rtex/error.hpp"
#include "rtex/extremal.hpp"
#include "rtex/families.hpp"
#include "rtex/invariants.hpp"
#include "rtex/optimizer.hpp"
#include "rtex/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace rtex {

VerifyHooks VerifyHooks::standard() {
    VerifyHooks h;
    h.andrasfai = [](int k) { return rtex::andrasfai(k); };
    h.vega_base = [](int i) { return rtex::vega_base(i); };
    return h;
}

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.ok; }));
}

namespace {

class Recorder {
  public:
    Recorder(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

    /// Runs `body`; an exception counts as a failure with its message.
    template <class F>
    void check(const std::string& name, F&& body) {
        CheckResult r{suite_, name, false, {}};
        try {
            std::string detail;
            r.ok = body(detail);
            r.detail = std::move(detail);
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(r));
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

  private:
    VerifyReport& report_;
    std::string suite_;
};

Graph hook_vega(const VerifyHooks& h, int i, int mu, int nu) {
    std::vector<int> drop;
    if (mu)
        drop.push_back(vega_slot::y);
    if (nu)
        drop.push_back(vega_slot::core + 2 * i - 1);
    return h.vega_base(i).without_vertices(drop);
}

void facts_suite(const VerifyHooks& h, VerifyReport& report) {
    Recorder rec(report, "facts");
    for (int k = 1; k <= 8; ++k) {
        rec.check("andrasfai k=" + std::to_string(k) + " basic invariants", [&](std::string& d) {
            Graph g = h.andrasfai(k);
            auto deg = g.regular_degree();
            bool ok = g.order() == 3 * k - 1 && deg && *deg == k && is_triangle_free(g) &&
                      independence_number(g) == k;
            if (k >= 2)
                ok = ok && chromatic_number(g) == 3;
            d = "n=" + std::to_string(g.order()) + " e=" + std::to_string(g.edge_count());
            return ok;
        });
        rec.check("andrasfai k=" + std::to_string(k) + " is the cyclic Cayley graph",
                  [&](std::string&) {
                      std::vector<int> S;
                      for (int j = k; j <= 2 * k - 1; ++j)
                          S.push_back(j);
                      return isomorphic(cayley_cyclic(3 * k - 1, S), h.andrasfai(k));
                  });
        rec.check("andrasfai k=" + std::to_string(k) + " independent sets lie in neighbourhoods",
                  [&](std::string& d) {
                      Graph g = h.andrasfai(k);
                      auto sets = maximal_independent_sets(g);
                      for (const auto& I : sets) {
                          bool covered = false;
                          for (int v = 0; v < g.order() && !covered; ++v)
                              covered = I.subset_of(g.neighbors(v));
                          if (!covered) {
                              d = "uncovered set of size " + std::to_string(I.count());
                              return false;
                          }
                      }
                      return true;
                  });
        if (k >= 2)
            rec.check("andrasfai k=" + std::to_string(k) + " contains k-1 after deleting v0,vk,v2k",
                      [&](std::string&) {
                          std::vector<int> drop{0, k, 2 * k};
                          return isomorphic(h.andrasfai(k).without_vertices(drop),
                                            h.andrasfai(k - 1));
                      });
    }
    for (int i = 2; i <= 4; ++i)
        for (int mu : {0, 1})
            for (int nu : {0, 1})
                rec.check("vega i=" + std::to_string(i) + " mu=" + std::to_string(mu) +
                              " nu=" + std::to_string(nu) + " invariants",
                          [&](std::string& d) {
                              Graph g = hook_vega(h, i, mu, nu);
                              d = "n=" + std::to_string(g.order());
                              return g.order() == 3 * i + 7 - mu - nu && is_triangle_free(g) &&
                                     chromatic_number(g) == 4;
                          });
    rec.check("smallest Vega graph is the Mycielskian of C5", [&](std::string&) {
        return isomorphic(hook_vega(h, 2, 1, 1), mycielskian(cycle_graph(5)));
    });
    for (int i = 2; i <= 8; ++i)
        for (int mu : {0, 1})
            for (int nu : {0, 1})
                rec.check("omega identities i=" + std::to_string(i) + " mu=" + std::to_string(mu) +
                              " nu=" + std::to_string(nu),
                          [&](std::string& d) {
                              Graph base = h.vega_base(i);
                              WeightVector w(base, omega(i, mu, nu).weights());
                              const int k = vega_k(i, mu, nu);
                              bool ok = w.total() == 3 * k - 1;
                              auto sums = class_neighborhood_sizes(w);
                              for (int z = 0; z < base.order(); ++z) {
                                  bool kept = !(mu && z == vega_slot::y) &&
                                              !(nu && z == vega_slot::core + 2 * i - 1);
                                  ok = ok && (w[z] > 0) == kept;
                                  if (kept && sums[z] != k) {
                                      d = "neighbourhood of " + base.label(z) + " weighs " +
                                          std::to_string(sums[z]);
                                      ok = false;
                                  }
                              }
                              return ok;
                          });
    for (int i = 2; i <= 3; ++i)
        for (int mu : {0, 1})
            for (int nu : {0, 1})
                rec.check("regular Vega blow-up i=" + std::to_string(i) + " mu=" +
                              std::to_string(mu) + " nu=" + std::to_string(nu),
                          [&](std::string&) {
                              const int k = vega_k(i, mu, nu);
                              Graph g = blow_up(WeightVector(h.vega_base(i), omega(i, mu, nu).weights()));
                              auto deg = g.regular_degree();
                              return g.order() == 3 * k - 1 && deg && *deg == k &&
                                     is_triangle_free(g);
                          });
    rec.check("class neighbourhoods sum to k n on random blow-ups", [&](std::string& d) {
        std::mt19937_64 rng(20240611);
        for (int t = 0; t < 200; ++t) {
            const int k = 1 + static_cast<int>(rng() % 6);
            Graph base = h.andrasfai(k);
            auto deg = base.regular_degree();
            if (!deg) {
                d = "base for k=" + std::to_string(k) + " is not regular";
                return false;
            }
            std::vector<std::int64_t> w(static_cast<std::size_t>(base.order()));
            for (auto& x : w)
                x = static_cast<std::int64_t>(rng() % 5);
            if (!check_sum_identity(WeightVector(base, w), *deg))
                return false;
        }
        return true;
    });
    rec.check("edge bound and g_k sample values", [&](std::string&) {
        return edge_bound(5, 2, 9, 4, 1) == 17 && g_k(9, 4, 2) == 17 && g_k(16, 6, 3) == 48 &&
               g_k(9, 4, 2) == g_k_factored(9, 4, 2);
    });
    rec.check("both forms of g_k agree", [&](std::string& d) {
        for (int k = 1; k <= 12; ++k)
            for (int n = 1; n <= 40; ++n)
                for (int s = 1; s <= n; ++s)
                    if (g_k(n, s, k) != g_k_factored(n, s, k)) {
                        d = "differ at n=" + std::to_string(n) + " s=" + std::to_string(s) +
                            " k=" + std::to_string(k);
                        return false;
                    }
        return true;
    });
}

void families_suite(const VerifyHooks& h, VerifyReport& report) {
    Recorder rec(report, "families");
    for (int k : {2, 3})
        rec.check("andrasfai family members, k=" + std::to_string(k) + ", n <= 30",
                  [&](std::string& d) {
                      for (int n = 1; n <= 30; ++n)
                          for (int s = 1; s <= n; ++s) {
                              if (!in_family_window(n, s, k))
                                  continue;
                              auto members = family_G(n, s, k);
                              const std::int64_t lam = lambda(n, s, k);
                              const bool interior = (3 * k - 4) * s < (k - 1) * n;
                              if (interior && static_cast<std::int64_t>(members.size()) != lam / 2 + 1) {
                                  d = "member count at n=" + std::to_string(n) + " s=" + std::to_string(s);
                                  return false;
                              }
                              for (const auto& m : members) {
                                  WeightVector w(h.andrasfai(k), m.weights.weights());
                                  Graph g = blow_up(w);
                                  if (g.order() != n || Rational(g.edge_count()) != g_k(n, s, k) ||
                                      !is_triangle_free(g) || independence_number(g) > s) {
                                      d = "bad member at n=" + std::to_string(n) + " s=" +
                                          std::to_string(s);
                                      return false;
                                  }
                              }
                          }
                      return true;
                  });
    rec.check("vega family at n=29 s=10 k=10", [&](std::string& d) {
        auto members = family_H(29, 10, 10);
        if (members.size() != 1) {
            d = std::to_string(members.size()) + " members";
            return false;
        }
        Graph g = blow_up(WeightVector(h.vega_base(2), members[0].weights.weights()));
        auto deg = g.regular_degree();
        return g.order() == 29 && deg && *deg == 10 && g.edge_count() == 145 &&
               is_triangle_free(g) && independence_number(g) <= 10;
    });
}

void windows_suite(const VerifyHooks& h, VerifyReport& report, unsigned threads) {
    Recorder rec(report, "windows");
    OracleOptions oo;
    oo.threads = threads;
    for (int n = 1; n <= 10; ++n) {
        std::vector<SearchReport> table;
        rec.check("exhaustive values n=" + std::to_string(n), [&](std::string& d) {
            table = ex_table(n, oo);
            bool ok = true;
            std::int64_t previous = -1;
            for (int s = 1; s <= n; ++s) {
                const auto& r = table[s - 1];
                if (!r.optimum)
                    continue;
                const std::int64_t ex = *r.optimum;
                auto fail = [&](const std::string& why) {
                    d += why + " at s=" + std::to_string(s) + "; ";
                    ok = false;
                };
                if (ex < previous)
                    fail("not monotone in s");
                previous = ex;
                if (ex > static_cast<std::int64_t>(n) * s / 2)
                    fail("exceeds ns/2");
                if (2 * s > n && ex != mantel(n))
                    fail("differs from floor(n^2/4)");
                if (5 * s >= 2 * n && 2 * s <= n && ex != n * n - 4 * n * s + 5 * s * s)
                    fail("differs from n^2-4ns+5s^2");
                if (3 * s > n && 2 * s <= n) {
                    GMin gm = g_min(n, s);
                    if (Rational(ex) != gm.value)
                        rec.note("n=" + std::to_string(n) + " s=" + std::to_string(s) +
                                 ": exact value " + std::to_string(ex) +
                                 " differs from the conjectured minimum " + to_string(gm.value));
                }
            }
            return ok;
        });
    }
    for (int k : {2, 3})
        rec.check("blow-up optimum equals g_k on the window, k=" + std::to_string(k) + ", n <= 20",
                  [&](std::string& d) {
                      Graph base = h.andrasfai(k);
                      if (!is_triangle_free(base)) {
                          d = "base has a triangle";
                          return false;
                      }
                      for (int n = 3 * k - 1; n <= 20; ++n)
                          for (int s = 1; s <= n; ++s) {
                              if (!in_family_window(n, s, k))
                                  continue;
                              SearchReport r = max_blowup_edges(base, n, s);
                              if (!r.optimum || Rational(*r.optimum) != g_k(n, s, k)) {
                                  d = "n=" + std::to_string(n) + " s=" + std::to_string(s);
                                  return false;
                              }
                          }
                      return true;
                  });
}

} // namespace

VerifyReport run_verify(const std::string& suite, const VerifyHooks& hooks, unsigned threads) {
    if (suite != "facts" && suite != "families" && suite != "windows" && suite != "all")
        throw BadParams("unknown suite '" + suite + "'");
    VerifyReport report;
    if (suite == "facts" || suite == "all")
        facts_suite(hooks, report);
    if (suite == "families" || suite == "all")
        families_suite(hooks, report);
    if (suite == "windows" || suite == "all")
        windows_suite(hooks, report, threads);
    return report;
}

} // namespace rtex
