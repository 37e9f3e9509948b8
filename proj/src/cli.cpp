#include "rtex/cli.hpp"

#include "rtex/blowup.hpp"
#include "rtex/canonical.hpp"
#include "rtex/constructions.hpp"
#include "rtex/error.hpp"
#include "rtex/extremal.hpp"
#include "rtex/families.hpp"
#include "rtex/invariants.hpp"
#include "rtex/optimizer.hpp"
#include "rtex/oracle.hpp"
#include "rtex/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>

namespace rtex {

namespace {

std::string props_line(const Graph& g) {
    std::ostringstream os;
    auto reg = g.regular_degree();
    os << "n=" << g.order() << " e=" << g.edge_count()
       << " regular=" << (reg ? std::to_string(*reg) : std::string("no"))
       << " alpha=" << independence_number(g)
       << " chi=" << (g.order() ? std::to_string(chromatic_number(g)) : std::string("0"))
       << " triangle_free=" << (is_triangle_free(g) ? "true" : "false");
    return os.str();
}

/// "gamma<k>", "vega<i><mu><nu>", "-" (graph6 from stdin) or graph6.
Graph parse_graph_argument(const std::string& text, std::istream& in) {
    static const std::regex gamma_re("gamma([0-9]+)");
    static const std::regex vega_re("vega([0-9]+)([01])([01])");
    std::smatch m;
    if (std::regex_match(text, m, gamma_re))
        return andrasfai(std::stoi(m[1]));
    if (std::regex_match(text, m, vega_re))
        return vega(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
    if (text == "-") {
        std::string line;
        if (!std::getline(in, line))
            throw MalformedInput("no graph6 line on standard input");
        return from_graph6(line);
    }
    return from_graph6(text);
}

nlohmann::json member_json(const FamilyMember& m) {
    nlohmann::json j;
    j["family"] = std::string(1, m.params.family);
    j["n"] = m.n;
    j["s"] = m.s;
    j["k"] = m.params.k;
    if (m.params.i)
        j["i"] = *m.params.i;
    if (m.params.mu)
        j["mu"] = *m.params.mu;
    if (m.params.nu)
        j["nu"] = *m.params.nu;
    if (m.params.a)
        j["a"] = *m.params.a;
    if (m.params.b)
        j["b"] = *m.params.b;
    if (m.params.clause)
        j["clause"] = std::string(1, *m.params.clause);
    j["base_graph6"] = to_graph6(m.base());
    j["base_labels"] = m.base().labels();
    j["weights"] = m.weights.weights();
    j["edges"] = m.edges;
    j["edge_check_ok"] = m.edge_check_ok;
    return j;
}

std::string describe(const FamilyParams& p) {
    std::ostringstream os;
    os << "k=" << p.k;
    if (p.i)
        os << " i=" << *p.i << " mu=" << *p.mu << " nu=" << *p.nu;
    if (p.clause)
        os << " clause=" << *p.clause;
    if (p.a)
        os << " a=" << *p.a << " b=" << *p.b;
    return os.str();
}

struct Settings {
    unsigned threads = 0;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Constructions, bounds and exact search for triangle-free graphs with "
                 "bounded independence number"};
    app.require_subcommand(1);
    Settings settings;
    app.add_option("--threads", settings.threads, "worker threads (0 = all cores)");

    std::function<int()> action;

    // gen
    auto* gen = app.add_subcommand("gen", "construct a graph and print its graph6");
    gen->require_subcommand(1);
    bool props = false;
    int gk_arg = 0, gi = 0, gmu = 0, gnu = 0;
    auto* gen_a = gen->add_subcommand("andrasfai", "Andrasfai graph");
    gen_a->add_option("k", gk_arg)->required();
    auto* gen_v = gen->add_subcommand("vega", "Vega graph");
    auto* gen_vb = gen->add_subcommand("vega-blowup", "regular blow-up of a Vega graph");
    for (auto* sub : {gen_v, gen_vb}) {
        sub->add_option("i", gi)->required();
        sub->add_option("mu", gmu)->required();
        sub->add_option("nu", gnu)->required();
    }
    for (auto* sub : {gen_a, gen_v, gen_vb})
        sub->add_flag("--props", props, "also print n, e, regularity, alpha, chi");
    auto emit_graph = [&](const Graph& g) {
        out << to_graph6(g) << '\n';
        if (props)
            out << props_line(g) << '\n';
        return kExitOk;
    };
    gen_a->callback([&] { action = [&] { return emit_graph(andrasfai(gk_arg)); }; });
    gen_v->callback([&] { action = [&] { return emit_graph(vega(gi, gmu, gnu)); }; });
    gen_vb->callback([&] { action = [&] { return emit_graph(vega_regular_blowup(gi, gmu, gnu)); }; });

    // gk
    auto* gk = app.add_subcommand("gk", "evaluate g_k(n,s) exactly");
    std::int64_t gn = 0, gs = 0;
    std::int64_t kk = 0;
    bool use_min = false;
    gk->add_option("n", gn)->required();
    gk->add_option("s", gs)->required();
    auto* kopt = gk->add_option("--k", kk, "a single k");
    auto* mopt = gk->add_flag("--min", use_min, "minimum over k with the smallest minimiser");
    kopt->excludes(mopt);
    gk->callback([&] {
        action = [&] {
            if (*kopt) {
                if (kk < 1)
                    throw BadParams("k must be positive");
                out << to_string(g_k(gn, gs, kk)) << '\n';
                return kExitOk;
            }
            GMin m = g_min(gn, gs);
            out << to_string(m.value) << ' '
                << (m.argmin ? "(k=" + std::to_string(*m.argmin) + ")" : std::string("(mantel)"))
                << '\n';
            return kExitOk;
        };
    });

    // family
    auto* fam = app.add_subcommand("family", "list a conjectured extremal family");
    std::string which;
    std::int64_t fn = 0, fs = 0;
    int fk = 0;
    std::string out_dir;
    fam->add_option("family", which)->required()->check(CLI::IsMember({"g", "h"}));
    fam->add_option("n", fn)->required();
    fam->add_option("s", fs)->required();
    fam->add_option("k", fk)->required();
    fam->add_option("--out", out_dir, "write graph6 files and JSON sidecars here");
    fam->callback([&] {
        action = [&] {
            std::vector<std::string> diagnostics;
            auto members = which == "g" ? family_G(fn, fs, fk) : family_H(fn, fs, fk, &diagnostics);
            for (const auto& d : diagnostics)
                err << "note: " << d << '\n';
            if (!out_dir.empty())
                std::filesystem::create_directories(out_dir);
            for (std::size_t j = 0; j < members.size(); ++j) {
                const auto& m = members[j];
                std::string g6 = m.weights.total() <= kCapacity ? to_graph6(m.graph()) : "";
                out << g6 << (g6.empty() ? "" : " ") << describe(m.params)
                    << " edges=" << m.edges << (m.edge_check_ok ? "" : " EDGE_MISMATCH") << '\n';
                if (!out_dir.empty()) {
                    std::string stem = which + "_" + std::to_string(fn) + "_" + std::to_string(fs) +
                                       "_" + std::to_string(fk) + "_" + std::to_string(j);
                    std::ofstream(std::filesystem::path(out_dir) / (stem + ".g6")) << g6 << '\n';
                    std::ofstream(std::filesystem::path(out_dir) / (stem + ".json"))
                        << member_json(m).dump(2) << '\n';
                }
            }
            return kExitOk;
        };
    });

    // optimize
    auto* opt = app.add_subcommand("optimize", "maximise blow-up edges over a base graph");
    std::string base_arg;
    std::int64_t on = 0, os_ = 0, min_weight = 0;
    std::uint64_t budget = 1'000'000'000;
    opt->add_option("base", base_arg, "gamma<k>, vega<i><mu><nu>, graph6, or - for stdin")->required();
    opt->add_option("n", on)->required();
    opt->add_option("s", os_)->required();
    opt->add_option("--min-weight", min_weight, "smallest class size (1 = proper blow-ups)");
    opt->add_option("--budget", budget, "node budget");
    opt->callback([&] {
        action = [&] {
            OptimizerOptions o;
            o.min_weight = min_weight;
            o.node_budget = budget;
            o.threads = settings.threads;
            o.progress = [&](std::uint64_t nodes) { err << "nodes: " << nodes << '\n'; };
            Graph base = parse_graph_argument(base_arg, in);
            SearchReport r;
            try {
                r = max_blowup_edges(base, on, os_, o);
            } catch (const Infeasible& e) {
                r.mode = "blowup";
                r.flags.push_back("Infeasible");
            }
            auto j = r.to_json();
            j["n"] = on;
            j["s"] = os_;
            out << j.dump() << '\n';
            return kExitOk;
        };
    });

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact ex(n,s)");
    int orn = 0, ors = 0;
    std::string mode_text = "full";
    std::string db;
    orc->add_option("n", orn)->required();
    orc->add_option("s", ors)->required();
    orc->add_option("--mode", mode_text)->check(CLI::IsMember({"full", "structured"}));
    orc->add_option("--db", db, "result store (default: $RTEX_DB)");
    orc->callback([&] {
        action = [&] {
            OracleMode mode = parse_oracle_mode(mode_text);
            std::optional<ResultStore> store;
            if (!db.empty())
                store.emplace(db);
            else if (auto p = ResultStore::default_path())
                store.emplace(*p);
            std::optional<SearchReport> r;
            if (store)
                r = store->lookup(orn, ors, mode);
            if (!r) {
                OracleOptions oo;
                oo.threads = settings.threads;
                r = exact_ex(orn, ors, mode, oo);
                if (store)
                    store->append(orn, ors, mode, *r);
            }
            auto j = r->to_json();
            j["n"] = orn;
            j["s"] = ors;
            out << j.dump() << '\n';
            return kExitOk;
        };
    });

    // scan
    auto* scan = app.add_subcommand("scan", "exact values against the conjectured minimum");
    int sn = 0;
    bool csv = false;
    scan->add_option("n", sn)->required();
    scan->add_option("--db", db, "result store (default: $RTEX_DB)");
    scan->add_flag("--csv", csv, "CSV output (the only format)");
    scan->callback([&] {
        action = [&] {
            std::optional<ResultStore> store;
            if (!db.empty())
                store.emplace(db);
            else if (auto p = ResultStore::default_path())
                store.emplace(*p);
            OracleOptions oo;
            oo.threads = settings.threads;
            // Every s above n/3, where the conjectured minimum is defined.
            const int first = sn / 3 + 1;
            std::map<int, std::optional<std::int64_t>> ex;
            bool skipped = sn > oo.max_order;
            if (!skipped) {
                bool missing = !store;
                for (int s = first; s <= sn && !missing; ++s) {
                    auto r = store->lookup(sn, s, OracleMode::Full);
                    if (r)
                        ex[s] = r->optimum;
                    else
                        missing = true;
                }
                if (missing) {
                    auto table = ex_table(sn, oo);
                    for (int s = first; s <= sn; ++s) {
                        ex[s] = table[s - 1].optimum;
                        if (store && !store->lookup(sn, s, OracleMode::Full))
                            store->append(sn, s, OracleMode::Full, table[s - 1]);
                    }
                }
            }
            out << "n,s,ex,g_min,argmin_k,status\n";
            for (int s = first; s <= sn; ++s) {
                GMin g = g_min(sn, s);
                out << sn << ',' << s << ',';
                std::string status = "ORACLE_SKIPPED";
                if (!skipped && ex[s]) {
                    out << *ex[s];
                    status = Rational(*ex[s]) == g.value ? "MATCH" : "MISMATCH";
                }
                out << ',' << to_string(g.value) << ','
                    << (g.argmin ? std::to_string(*g.argmin) : std::string("-")) << ',' << status
                    << '\n';
            }
            return kExitOk;
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "run the fact battery");
    std::string suite = "all";
    ver->add_option("--suite", suite)->check(CLI::IsMember({"facts", "families", "windows", "all"}));
    ver->callback([&] {
        action = [&] {
            VerifyReport r = run_verify(suite, VerifyHooks::standard(), settings.threads);
            for (const auto& c : r.checks)
                out << (c.ok ? "PASS " : "FAIL ") << c.suite << ": " << c.name
                    << (c.detail.empty() || c.ok ? "" : " (" + c.detail + ")") << '\n';
            for (const auto& note : r.notes)
                out << "NOTE " << note << '\n';
            out << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
            return r.ok() ? kExitOk : kExitVerifyFailed;
        };
    });

    // classify
    auto* cls = app.add_subcommand("classify", "extremal-family membership");
    std::string graph_arg;
    std::int64_t cn = 0, cs = 0;
    cls->add_option("graph", graph_arg, "graph6 or - for stdin")->required();
    cls->add_option("n", cn)->required();
    cls->add_option("s", cs)->required();
    cls->callback([&] {
        action = [&] {
            Classification c = classify_extremal(parse_graph_argument(graph_arg, in), cn, cs);
            if (c.kind == Classification::Kind::Neither)
                out << "neither: " << c.reason << '\n';
            else
                out << "in " << to_string(c.kind) << ": " << describe(c.match->params) << '\n';
            return kExitOk;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (!action) {
        err << "usage error: no command\n";
        return kExitUsage;
    }
    try {
        return action();
    } catch (const ResourceLimit& e) {
        err << e.what() << '\n';
        return kExitResource;
    } catch (const CapacityExceeded& e) {
        err << e.what() << '\n';
        return kExitResource;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace rtex
