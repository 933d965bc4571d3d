#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "colexent/colex.hpp"
#include "colexent/entropy.hpp"
#include "colexent/majorization.hpp"
#include "colexent/oracle.hpp"
#include "colexent/report_io.hpp"
#include "colexent/serialize.hpp"
#include "colexent/threshold.hpp"

namespace py = pybind11;
using namespace colexent;

namespace {

py::object to_py_int(const ExactKey& key) {
    const std::string digits = key.str();
    PyObject* value = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (value == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(value);
}

int ordering_to_int(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return -1;
    if (o == std::strong_ordering::greater) return 1;
    return 0;
}

std::string repr_sequence(const DegreeSequence& s) {
    return "DegreeSequence([" + to_string(s) + "])";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Degree-based graph entropy, colex graphs, and exhaustive extremal verification";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
        .def("degrees", &Graph::degrees)
        .def("adjacency", &Graph::adjacency)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    py::class_<DegreeSequence>(m, "DegreeSequence")
        .def(py::init<std::vector<int>>(), py::arg("degrees"))
        .def_property_readonly("values", [](const DegreeSequence& s) { return s.values(); })
        .def_property_readonly("sum", &DegreeSequence::sum)
        .def("__len__", &DegreeSequence::length)
        .def("__getitem__",
             [](const DegreeSequence& s, std::size_t i) {
                 if (i >= s.length()) throw py::index_error();
                 return s[i];
             })
        .def("__eq__", [](const DegreeSequence& a, const DegreeSequence& b) { return a == b; })
        .def("__str__", [](const DegreeSequence& s) { return to_string(s); })
        .def("__repr__", &repr_sequence);
    py::implicitly_convertible<py::list, DegreeSequence>();
    py::implicitly_convertible<py::tuple, DegreeSequence>();

    m.def("degree_sequence", &degree_sequence, py::arg("g"));
    m.def("is_connected", &is_connected, py::arg("g"));

    m.def("f_xlogx", &f_xlogx, py::arg("x"));
    m.def("h_value", &h_value, py::arg("s"));
    m.def("h_exact_key", [](const DegreeSequence& s) { return to_py_int(h_exact_key(s)); },
          py::arg("s"));
    m.def("compare_h",
          [](const DegreeSequence& a, const DegreeSequence& b) {
              return ordering_to_int(compare_h(a, b));
          },
          py::arg("a"), py::arg("b"),
          "Exact ordering of h: -1 (less), 0 (equal), or 1 (greater)");
    m.def("entropy", &entropy, py::arg("s"));
    m.def("h_generic", &h_generic, py::arg("s"), py::arg("g"));

    py::class_<GlobalDecomposition>(m, "GlobalDecomposition")
        .def_readonly("k", &GlobalDecomposition::k)
        .def_readonly("ell", &GlobalDecomposition::ell)
        .def("__repr__", [](const GlobalDecomposition& d) {
            return "GlobalDecomposition(k=" + std::to_string(d.k) +
                   ", ell=" + std::to_string(d.ell) + ")";
        });
    py::class_<ColexDecomposition>(m, "ColexDecomposition")
        .def_readonly("m", &ColexDecomposition::m)
        .def_readonly("k", &ColexDecomposition::k)
        .def_readonly("a", &ColexDecomposition::a)
        .def_readonly("b", &ColexDecomposition::b)
        .def("__repr__", [](const ColexDecomposition& d) {
            return "ColexDecomposition(m=" + std::to_string(d.m) + ", k=" + std::to_string(d.k) +
                   ", a=" + std::to_string(d.a) + ", b=" + std::to_string(d.b) + ")";
        });
    py::class_<LiftedDecomposition>(m, "LiftedDecomposition")
        .def_readonly("a_lift", &LiftedDecomposition::a_lift)
        .def_readonly("b_lift", &LiftedDecomposition::b_lift)
        .def("__repr__", [](const LiftedDecomposition& d) {
            return "LiftedDecomposition(a_lift=" + std::to_string(d.a_lift) +
                   ", b_lift=" + std::to_string(d.b_lift) + ")";
        });

    m.def("decompose_global", &decompose_global, py::arg("m"));
    m.def("decompose", &decompose, py::arg("m"), py::arg("k"));
    m.def("lift_decomposition", &lift_decomposition, py::arg("m"), py::arg("k"));
    m.def("build_colex", &build_colex, py::arg("m"));
    m.def("build_colex_k", &build_colex_k, py::arg("m"), py::arg("k"));
    m.def("closed_form_degseq", &closed_form_degseq, py::arg("m"), py::arg("k"));

    py::enum_<Step>(m, "Step")
        .value("Isolated", Step::Isolated)
        .value("Dominating", Step::Dominating);
    py::class_<CreationSequence>(m, "CreationSequence")
        .def(py::init<std::vector<Step>>(), py::arg("steps"))
        .def_static("parse", &CreationSequence::parse, py::arg("text"))
        .def_property_readonly("steps", &CreationSequence::steps)
        .def("__len__", &CreationSequence::length)
        .def("__str__", &CreationSequence::to_string)
        .def("__eq__",
             [](const CreationSequence& a, const CreationSequence& b) { return a == b; })
        .def("__repr__", [](const CreationSequence& c) {
            return "CreationSequence.parse(\"" + c.to_string() + "\")";
        });

    m.def("realize", &realize, py::arg("c"));
    m.def("enumerate_creation",
          [](int n) { return enumerate_creation(n); }, py::arg("n"));
    m.def("is_threshold", &is_threshold, py::arg("g"));
    m.def("clique_number", &clique_number, py::arg("g"));
    m.def("clique_number_exhaustive", &clique_number_exhaustive, py::arg("g"));
    m.def("enumerate_threshold_by_size",
          [](long long m_) { return enumerate_threshold_by_size(m_); }, py::arg("m"));

    m.def("majorizes", &majorizes, py::arg("x"), py::arg("y"));
    m.def("check_karamata", &check_karamata, py::arg("x"), py::arg("y"), py::arg("g"),
          py::arg("strict_convex") = false);
    m.def("balanced_gain_argmax", &balanced_gain_argmax, py::arg("t"), py::arg("n"),
          py::arg("ell"));

    m.def("erdos_gallai_violation", &erdos_gallai_violation, py::arg("degrees"));
    m.def("is_graphical", &is_graphical, py::arg("degrees"));
    m.def("enumerate_graphical",
          [](long long m_) { return enumerate_graphical(m_); }, py::arg("m"));

    py::enum_<Verdict>(m, "Verdict")
        .value("match", Verdict::match)
        .value("mismatch", Verdict::mismatch)
        .value("tie_with_expected", Verdict::tie_with_expected);

    py::class_<ExtremalReport>(m, "ExtremalReport")
        .def_readonly("m", &ExtremalReport::m)
        .def_readonly("argmax_sequences", &ExtremalReport::argmax_sequences)
        .def_readonly("h_float", &ExtremalReport::h_float)
        .def_property_readonly("exact_key",
                               [](const ExtremalReport& r) { return to_py_int(r.exact_key); })
        .def_readonly("expected", &ExtremalReport::expected)
        .def_readonly("verdict", &ExtremalReport::verdict)
        .def("__repr__", [](const ExtremalReport& r) {
            return "ExtremalReport(m=" + std::to_string(r.m) + ", verdict=" +
                   verdict_name(r.verdict) + ")";
        });

    py::class_<VerificationOutcome>(m, "VerificationOutcome")
        .def_readonly("claim_id", &VerificationOutcome::claim_id)
        .def_readonly("parameter_range", &VerificationOutcome::parameter_range)
        .def_readonly("holds", &VerificationOutcome::holds)
        .def_readonly("counterexamples", &VerificationOutcome::counterexamples)
        .def_property_readonly("elapsed_seconds",
                               [](const VerificationOutcome& o) { return o.elapsed.count(); })
        .def_readonly("details", &VerificationOutcome::details)
        .def("__repr__", [](const VerificationOutcome& o) {
            return "VerificationOutcome(claim=" + o.claim_id + ", holds=" +
                   (o.holds ? std::string("True") : std::string("False")) + ")";
        });

    m.def("find_max_h", &find_max_h, py::arg("m"));
    m.def("verify_main_theorem",
          [](long long m_max, int threads) { return verify_main_theorem(m_max, {threads}); },
          py::arg("m_max"), py::arg("threads") = 1);
    m.def("verify_max_entropy",
          [](long long m_max, int threads) { return verify_max_entropy(m_max, {threads}); },
          py::arg("m_max"), py::arg("threads") = 1);
    m.def("verify_lemma_largeclique",
          [](int k_max, long long span, int threads) {
              return verify_lemma_largeclique(k_max, span, {threads});
          },
          py::arg("k_max"), py::arg("span") = 500, py::arg("threads") = 1);
    m.def("verify_equality_boundary", &verify_equality_boundary, py::arg("k_max"));
    m.def("verify_threshold_theorem",
          [](long long m_max, int threads) { return verify_threshold_theorem(m_max, {threads}); },
          py::arg("m_max"), py::arg("threads") = 1);
    m.def("verify_extremal_is_threshold",
          [](long long m_max, int threads) {
              return verify_extremal_is_threshold(m_max, {threads});
          },
          py::arg("m_max"), py::arg("threads") = 1);
    m.def("verify_trees",
          [](int n_max, int threads) { return verify_trees(n_max, {threads}); }, py::arg("n_max"),
          py::arg("threads") = 1);
    m.def("verify_balanced_gain",
          [](long long t_max, int n_max, int ell_max, int threads) {
              return verify_balanced_gain(t_max, n_max, ell_max, {threads});
          },
          py::arg("t_max"), py::arg("n_max"), py::arg("ell_max"), py::arg("threads") = 1);
    m.def("verify_bounded_degree", &verify_bounded_degree, py::arg("m"), py::arg("r"));
    m.def("verify_bounded_degree_sweep",
          [](long long m_max, const std::vector<int>& rs, int threads) {
              return verify_bounded_degree_sweep(m_max, rs, {threads});
          },
          py::arg("m_max"), py::arg("rs"), py::arg("threads") = 1);
    m.def("verify_telescoping",
          [](int k_max, int threads) { return verify_telescoping(k_max, {threads}); },
          py::arg("k_max"), py::arg("threads") = 1);

    m.def("to_edge_list", &to_edge_list, py::arg("g"));
    m.def("from_edge_list",
          [](const std::string& text) { return from_edge_list(std::string_view(text)); },
          py::arg("text"));
    m.def("to_graph6", &to_graph6, py::arg("g"));
    m.def("from_graph6",
          [](const std::string& text) { return from_graph6(std::string_view(text)); },
          py::arg("text"));
    m.def("to_dot", &to_dot, py::arg("g"), py::arg("name") = "G");
    m.def("degree_sequence_string", [](const DegreeSequence& s) { return to_string(s); },
          py::arg("s"));
    m.def("parse_degree_sequence",
          [](const std::string& text) { return parse_degree_sequence(std::string_view(text)); },
          py::arg("text"));

    m.attr("__version__") = "0.1.0";
}
