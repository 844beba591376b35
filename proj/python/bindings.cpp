#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "starprod/aux_graph.hpp"
#include "starprod/basis.hpp"
#include "starprod/errors.hpp"
#include "starprod/localization.hpp"
#include "starprod/oracle.hpp"
#include "starprod/resolver.hpp"

namespace py = pybind11;
using namespace starprod;

namespace {

std::vector<Vertex> parse_all(const std::vector<std::string>& names) {
    std::vector<Vertex> out;
    out.reserve(names.size());
    for (const auto& s : names) out.push_back(parse_vertex(s));
    return out;
}

std::vector<std::string> names_of(const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(to_string(v));
    return out;
}

py::object witness_or_none(const Verdict<Vertex>& verdict) {
    if (verdict.ok()) return py::none();
    return py::make_tuple(to_string(verdict.witness->first), to_string(verdict.witness->second));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Metric dimension and minimum resolving sets of star-product grids";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    m.def("dimension", &dimension, py::arg("m"), py::arg("n"));

    m.def(
        "regime_of",
        [](int mm, int nn) {
            Regime r = regime_of(mm, nn);
            return py::make_tuple(std::string(1, to_char(r.tag)), r.normalized);
        },
        py::arg("m"), py::arg("n"), "Regime letter and whether (m, n) was swapped.");

    m.def(
        "build_basis", [](int mm, int nn) { return names_of(build_basis(mm, nn).landmarks()); }, py::arg("m"),
        py::arg("n"));

    m.def(
        "tiling_plan",
        [](int mm, int nn) {
            TilingPlan plan = tiling_plan(mm, nn);
            py::dict d;
            d["s"] = plan.s;
            d["t"] = plan.t;
            d["r"] = plan.r;
            d["singles"] = names_of(plan.singles);
            d["isolated"] = plan.isolated ? py::object(py::str(to_string(*plan.isolated))) : py::none();
            return d;
        },
        py::arg("m"), py::arg("n"));

    m.def(
        "distance",
        [](int mm, int nn, const std::string& u, const std::string& v) {
            return GridGraph(mm, nn).distance(parse_vertex(u), parse_vertex(v));
        },
        py::arg("m"), py::arg("n"), py::arg("u"), py::arg("v"));

    m.def(
        "metric_code",
        [](int mm, int nn, const std::string& v, const std::vector<std::string>& landmarks) {
            return metric_code(GridGraph(mm, nn), parse_vertex(v), parse_all(landmarks));
        },
        py::arg("m"), py::arg("n"), py::arg("v"), py::arg("landmarks"));

    m.def(
        "is_resolving",
        [](int mm, int nn, const std::vector<std::string>& landmarks) {
            return witness_or_none(is_resolving(GridGraph(mm, nn), parse_all(landmarks)));
        },
        py::arg("m"), py::arg("n"), py::arg("landmarks"),
        "None if the landmarks resolve the grid, else the first colliding pair.");

    m.def(
        "aux_report",
        [](int mm, int nn, const std::vector<std::string>& landmarks) {
            auto vs = parse_all(landmarks);
            AuxGraph h(GridGraph(mm, nn), vs);
            ComponentReport report = classify_components(h);
            py::dict d;
            d["path_orders"] = report.path_orders;
            d["non_path_count"] = report.non_path_count;
            d["isolated_right"] = report.isolated_right;
            d["max_degree"] = report.max_degree;
            d["b_prime_resolves"] = check_B_prime_resolves(h).ok();
            return d;
        },
        py::arg("m"), py::arg("n"), py::arg("landmarks"));

    m.def(
        "brute_force_dimension",
        [](int mm, int nn, std::uint64_t max_candidates, bool use_symmetry) {
            SearchBudget budget;
            budget.max_candidates = max_candidates;
            budget.use_symmetry = use_symmetry;
            OracleResult result;
            {
                py::gil_scoped_release release;
                result = brute_force_dimension(GridGraph(mm, nn), budget);
            }
            return py::make_tuple(result.dimension, names_of(result.witness.landmarks()));
        },
        py::arg("m"), py::arg("n"), py::arg("max_candidates") = SearchBudget{}.max_candidates,
        py::arg("use_symmetry") = false);

    m.def(
        "simulate",
        [](int mm, int nn, double p, std::uint64_t trials, std::uint64_t seed, const std::string& metric) {
            GridGraph g(mm, nn);
            CodeTable table(g, build_basis(mm, nn));
            SimulationResult sim = simulate(table, NoiseModel{p, seed}, trials, parse_decode_metric(metric));
            py::dict d;
            d["misidentification_rate"] = sim.misidentification_rate;
            d["ambiguity_rate"] = sim.ambiguity_rate;
            d["min_pairwise_l1"] = table.min_pairwise_l1();
            return d;
        },
        py::arg("m"), py::arg("n"), py::arg("p"), py::arg("trials") = 10000, py::arg("seed") = 42,
        py::arg("metric") = "hamming");
}
