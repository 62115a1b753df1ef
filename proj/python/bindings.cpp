#include "dimerlab/errors.hpp"
#include "dimerlab/pipeline.hpp"
#include "dimerlab/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dimerlab;

namespace {

std::vector<Diagonal> to_diagonals(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Diagonal> out;
    for (auto [a, b] : pairs) out.push_back(make_diagonal(n, a, b));
    return out;
}

std::vector<std::pair<int, int>> to_pairs(const std::vector<Diagonal>& ds) {
    std::vector<std::pair<int, int>> out;
    for (auto d : ds) out.emplace_back(d.a, d.b);
    return out;
}

py::dict move_dict(const FlipMove& mv) {
    py::dict d;
    d["removed"] = std::pair{mv.removed.a, mv.removed.b};
    d["inserted"] = std::pair{mv.inserted.a, mv.inserted.b};
    d["quadrilateral"] = mv.quadrilateral;
    return d;
}

SearchBudget budget_of(std::size_t visited, std::size_t length) { return {length, visited}; }

} // namespace

PYBIND11_MODULE(_dimerlab, m) {
    m.doc() = "GL_m-dimer models, their quivers and boundary algebras";
    m.attr("__version__") = kVersion;

    static py::exception<Error> error(m, "DimerlabError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<Triangulation>(m, "Triangulation")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& diagonals) {
                 return Triangulation(n, to_diagonals(n, diagonals));
             }),
             py::arg("n"), py::arg("diagonals"))
        .def_property_readonly("n", &Triangulation::n)
        .def_property_readonly("diagonals", [](const Triangulation& t) { return to_pairs(t.diagonals()); })
        .def_property_readonly("triangles", &Triangulation::triangles)
        .def("__eq__", [](const Triangulation& a, const Triangulation& b) { return a == b; })
        .def("__repr__", [](const Triangulation& t) { return "Triangulation(" + to_string(t) + ")"; });

    m.def("fan_triangulation", &fan_triangulation, py::arg("n"), py::arg("apex") = 1);
    m.def("enumerate_triangulations", &enumerate_triangulations, py::arg("n"));
    m.def("parse_triangulation", &parse_triangulation, py::arg("n"), py::arg("spec"));
    m.def(
        "flip",
        [](const Triangulation& t, std::pair<int, int> d) {
            auto [next, mv] = flip(t, make_diagonal(t.n(), d.first, d.second));
            return py::make_tuple(next, move_dict(mv));
        },
        py::arg("t"), py::arg("diagonal"));
    m.def(
        "flip_sequence",
        [](const Triangulation& a, const Triangulation& b) {
            py::list out;
            for (const auto& mv : flip_sequence(a, b)) out.append(move_dict(mv));
            return out;
        },
        py::arg("source"), py::arg("target"));
    m.def("p2", &p2, py::arg("s"), py::arg("k"));

    m.def(
        "dimer_json",
        [](const Triangulation& t, int order, bool reduced) {
            GLmDimer d = build_dimer(t, order);
            return to_json(reduced ? reduce_dimer(d) : d).dump();
        },
        py::arg("t"), py::arg("m"), py::arg("reduced") = true);
    m.def(
        "quiver_json", [](const Triangulation& t, int order) { return to_json(quiver_of(t, order)).dump(); },
        py::arg("t"), py::arg("m"));
    m.def(
        "quiver_dot", [](const Triangulation& t, int order) { return to_dot(quiver_of(t, order)); }, py::arg("t"),
        py::arg("m"));
    m.def(
        "gamma_json", [](int order, int n) { return to_json(build_gamma(order, n)).dump(); }, py::arg("m"),
        py::arg("n"));
    m.def(
        "verify_json",
        [](const Triangulation& t, int order, std::size_t visited, std::size_t length, bool reflect) {
            py::gil_scoped_release release;
            return to_json(verify_triangulation(t, order, {budget_of(visited, length), reflect})).dump();
        },
        py::arg("t"), py::arg("m"), py::arg("budget_visited") = SearchBudget{}.max_visited,
        py::arg("budget_length") = 0, py::arg("reflect") = false);
    m.def(
        "sweep_json",
        [](const std::vector<int>& ms, int min_n, int max_n, int workers, std::size_t visited, std::size_t length) {
            py::gil_scoped_release release;
            return to_json(run_sweep(ms, min_n, max_n, {budget_of(visited, length), false}, workers), false).dump();
        },
        py::arg("ms"), py::arg("min_n"), py::arg("max_n"), py::arg("workers") = 1,
        py::arg("budget_visited") = SearchBudget{}.max_visited, py::arg("budget_length") = 0);
    m.def(
        "flip_check_json",
        [](const Triangulation& t, std::pair<int, int> d, int order, std::size_t visited, std::size_t length) {
            Diagonal diag = make_diagonal(t.n(), d.first, d.second);
            py::gil_scoped_release release;
            return to_json(verify_flip_transport(t, diag, order, budget_of(visited, length))).dump();
        },
        py::arg("t"), py::arg("diagonal"), py::arg("m"), py::arg("budget_visited") = SearchBudget{}.max_visited,
        py::arg("budget_length") = 0);
}
