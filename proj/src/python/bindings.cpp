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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rtex;

namespace {

py::object fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict member_dict(const FamilyMember& m) {
    py::dict d;
    d["graph6"] = m.weights.total() <= kCapacity ? to_graph6(m.graph()) : std::string();
    d["base_graph6"] = to_graph6(m.base());
    d["weights"] = m.weights.weights();
    d["family"] = std::string(1, m.params.family);
    d["k"] = m.params.k;
    d["i"] = m.params.i;
    d["mu"] = m.params.mu;
    d["nu"] = m.params.nu;
    d["a"] = m.params.a;
    d["b"] = m.params.b;
    d["clause"] = m.params.clause ? py::object(py::str(std::string(1, *m.params.clause)))
                                  : py::object(py::none());
    d["edges"] = m.edges;
    d["edge_check_ok"] = m.edge_check_ok;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Triangle-free graphs with bounded independence number: constructions, "
              "bounds and exact search";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>())
        .def_static("from_edges",
                    [](int n, const std::vector<std::pair<int, int>>& e) { return Graph::from_edges(n, e); })
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def("graph6", [](const Graph& g) { return to_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("labels", [](const Graph& g) {
            std::vector<std::string> out;
            for (int v = 0; v < g.order(); ++v)
                out.push_back(g.label(v));
            return out;
        })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", e=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("is_triangle_free", &is_triangle_free);
    m.def("is_maximal_triangle_free", &is_maximal_triangle_free);
    m.def("independence_number", &independence_number);
    m.def("chromatic_number", &chromatic_number);
    m.def("canonical_form", [](const Graph& g) { return py::bytes(canonical_form(g)); });
    m.def("isomorphic", &isomorphic);

    m.def("andrasfai", &andrasfai, py::arg("k"));
    m.def("cayley_cyclic", [](int mod, const std::vector<int>& S) { return cayley_cyclic(mod, S); });
    m.def("independent_set_cover", [](int k, const std::vector<int>& S) { return independent_set_cover(k, S); });
    m.def("vega", &vega, py::arg("i"), py::arg("mu"), py::arg("nu"));
    m.def("vega_base", &vega_base, py::arg("i"));
    m.def("omega", [](int i, int mu, int nu) { return omega(i, mu, nu).weights(); });
    m.def("vega_regular_blowup", &vega_regular_blowup);
    m.def("mycielskian", &mycielskian);
    m.def("cycle_graph", &cycle_graph);

    m.def("blow_up", [](const Graph& base, const std::vector<std::int64_t>& w) {
        return blow_up(WeightVector(base, w));
    });
    m.def("blowup_alpha", [](const Graph& base, const std::vector<std::int64_t>& w) {
        return blowup_alpha(WeightVector(base, w));
    });
    m.def("class_neighborhood_sizes", [](const Graph& base, const std::vector<std::int64_t>& w) {
        return class_neighborhood_sizes(WeightVector(base, w));
    });
    m.def("edge_bound", [](std::int64_t r, std::int64_t k, std::int64_t n, std::int64_t s,
                           std::int64_t x) { return fraction(edge_bound(r, k, n, s, x)); });
    m.def("infer_regular_parameter", &infer_regular_parameter);

    m.def("g_k", [](std::int64_t n, std::int64_t s, std::int64_t k) { return fraction(g_k(n, s, k)); });
    m.def("g_min", [](std::int64_t n, std::int64_t s) {
        GMin g = g_min(n, s);
        return py::make_tuple(fraction(g.value), g.argmin);
    });
    m.def("critical_point", [](std::int64_t k) { return fraction(critical_point(k)); });
    m.def("theorem_window", [](std::int64_t k) {
        auto [lo, hi] = theorem_window(k);
        return py::make_tuple(fraction(lo), fraction(hi));
    });
    m.def("lambda_", &lambda);
    m.def("class_size_bounds", &class_size_bounds);
    m.def("fact_s_range_bound", &fact_s_range_bound);

    m.def("family_G", [](std::int64_t n, std::int64_t s, int k) {
        py::list out;
        for (const auto& mem : family_G(n, s, k))
            out.append(member_dict(mem));
        return out;
    });
    m.def("family_H", [](std::int64_t n, std::int64_t s, int k) {
        py::list out;
        for (const auto& mem : family_H(n, s, k))
            out.append(member_dict(mem));
        return out;
    });
    m.def("classify_extremal", [](const Graph& g, std::int64_t n, std::int64_t s) {
        Classification c = classify_extremal(g, n, s);
        py::dict d;
        d["kind"] = to_string(c.kind);
        d["reason"] = c.reason;
        d["match"] = c.match ? py::object(member_dict(*c.match)) : py::object(py::none());
        return d;
    });

    m.def(
        "max_blowup_edges",
        [](const Graph& base, std::int64_t n, std::int64_t s, std::int64_t min_weight, unsigned threads) {
            OptimizerOptions o;
            o.min_weight = min_weight;
            o.threads = threads;
            SearchReport r;
            {
                py::gil_scoped_release release;
                r = max_blowup_edges(base, n, s, o);
            }
            return json_to_py(r.to_json());
        },
        py::arg("base"), py::arg("n"), py::arg("s"), py::arg("min_weight") = 0, py::arg("threads") = 1);
    m.def(
        "exact_ex",
        [](int n, int s, const std::string& mode, unsigned threads) {
            OracleOptions o;
            o.threads = threads;
            SearchReport r;
            {
                py::gil_scoped_release release;
                r = exact_ex(n, s, parse_oracle_mode(mode), o);
            }
            return json_to_py(r.to_json());
        },
        py::arg("n"), py::arg("s"), py::arg("mode") = "full", py::arg("threads") = 1);
    m.def("count_maximal_triangle_free", [](int n) {
        py::gil_scoped_release release;
        return enumerate_maximal_triangle_free(n).size();
    });
    m.def(
        "verify",
        [](const std::string& suite) {
            VerifyReport r;
            {
                py::gil_scoped_release release;
                r = run_verify(suite);
            }
            py::list checks;
            for (const auto& c : r.checks)
                checks.append(py::make_tuple(c.suite, c.name, c.ok, c.detail));
            return py::make_tuple(r.ok(), checks, r.notes);
        },
        py::arg("suite") = "facts");
}
