#include "crank/corpus.hpp"
#include "crank/dsl.hpp"
#include "crank/errors.hpp"
#include "crank/naive.hpp"
#include "crank/suite.hpp"
#include "crank/trace_algebra.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace crank;

namespace {

py::object opt_int(const std::optional<int>& v) {
  return v ? py::cast(*v) : py::none();
}

py::object opt_points(const std::optional<std::vector<UPWord>>& v) {
  return v ? py::cast(*v) : py::none();
}

} // namespace

PYBIND11_MODULE(_crank, m) {
  m.doc() = "Rank, degree and Cantor-Bendixson analysis of closed families "
            "of infinite bit words.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Ordinal>(m, "Ordinal")
      .def(py::init([](const std::string& text) { return parse_ordinal(text); }))
      .def("__str__", [](const Ordinal& a) { return to_string(a); })
      .def("__repr__", [](const Ordinal& a) { return "Ordinal('" + to_string(a) + "')"; })
      .def("__eq__", [](const Ordinal& a, const Ordinal& b) { return a == b; })
      .def("__lt__", [](const Ordinal& a, const Ordinal& b) { return a < b; })
      .def("__le__", [](const Ordinal& a, const Ordinal& b) { return a <= b; })
      .def("__hash__", [](const Ordinal& a) { return py::hash(py::cast(to_string(a))); })
      .def_property_readonly("is_zero", &Ordinal::is_zero)
      .def_property_readonly("is_finite", &Ordinal::is_finite)
      .def_property_readonly("is_limit", [](const Ordinal& a) { return is_limit(a); })
      .def("succ", [](const Ordinal& a) { return ord_succ(a); })
      .def("fund_seq", [](const Ordinal& a, std::uint64_t n) { return fund_seq(a, n); });

  py::class_<RankValue>(m, "RankValue")
      .def_static("minus_one", &RankValue::minus_one)
      .def_static("infinity", &RankValue::infinity)
      .def_static("of", [](const Ordinal& a) { return RankValue::of(a); })
      .def("__str__", [](const RankValue& r) { return to_string(r); })
      .def("__repr__", [](const RankValue& r) { return "RankValue('" + to_string(r) + "')"; })
      .def("__eq__", [](const RankValue& a, const RankValue& b) { return a == b; })
      .def("__lt__", [](const RankValue& a, const RankValue& b) { return a < b; })
      .def_property_readonly("is_infinity", &RankValue::is_infinity)
      .def_property_readonly("is_minus_one", &RankValue::is_minus_one)
      .def_property_readonly("is_ordinal", &RankValue::is_ordinal)
      .def_property_readonly("ordinal", &RankValue::ordinal);

  py::class_<UPWord>(m, "UPWord")
      .def(py::init<std::string, std::string>(), py::arg("prefix"), py::arg("period"))
      .def(py::init([](const std::string& text) { return parse_upword(text); }))
      .def_property_readonly("prefix", &UPWord::prefix)
      .def_property_readonly("period", &UPWord::period)
      .def("bit", [](const UPWord& w, std::size_t i) { return std::string(1, w.bit(i)); })
      .def("unfold", &UPWord::unfold)
      .def("__str__", [](const UPWord& w) { return to_string(w); })
      .def("__repr__", [](const UPWord& w) { return "UPWord('" + to_string(w) + "')"; })
      .def("__eq__", [](const UPWord& a, const UPWord& b) { return a == b; })
      .def("__hash__", [](const UPWord& w) { return py::hash(py::cast(to_string(w))); });

  py::class_<Clopen>(m, "Clopen")
      .def(py::init([](const std::string& text) { return parse_clopen(text); }))
      .def_static("cylinder", &Clopen::cylinder)
      .def_static("whole_space", &Clopen::whole_space)
      .def_static("empty_set", &Clopen::empty_set)
      .def_property_readonly("is_empty", &Clopen::is_empty)
      .def_property_readonly("depth", &Clopen::depth)
      .def("contains", &Clopen::contains)
      .def("complement", [](const Clopen& c) { return complement(c); })
      .def("union", [](const Clopen& a, const Clopen& b) { return set_union(a, b); })
      .def("intersection", [](const Clopen& a, const Clopen& b) { return set_intersection(a, b); })
      .def("is_subset", [](const Clopen& a, const Clopen& b) { return is_subset(a, b); })
      .def("__or__", [](const Clopen& a, const Clopen& b) { return set_union(a, b); })
      .def("__and__", [](const Clopen& a, const Clopen& b) { return set_intersection(a, b); })
      .def("__invert__", [](const Clopen& c) { return complement(c); })
      .def("__eq__", [](const Clopen& a, const Clopen& b) { return a == b; })
      .def("__str__", [](const Clopen& c) { return to_string(c); })
      .def("__repr__", [](const Clopen& c) { return "Clopen('" + to_string(c) + "')"; });

  py::class_<PathAutomaton>(m, "PathAutomaton")
      .def(py::init([](const std::string& text) { return prune(parse_automaton(text)); }))
      .def_static("full_space", &PathAutomaton::full_space)
      .def_static("singleton", &PathAutomaton::singleton)
      .def_property_readonly("num_states", &PathAutomaton::num_states)
      .def_property_readonly("is_empty", &PathAutomaton::is_empty)
      .def("to_text", [](const PathAutomaton& a) { return to_string(a); })
      .def("to_dot", [](const PathAutomaton& a) { return to_dot(a); })
      .def("__contains__", [](const PathAutomaton& a, const UPWord& w) { return membership(a, w); })
      .def("__repr__", [](const PathAutomaton& a) {
        return "<PathAutomaton with " + std::to_string(a.num_states()) + " states>";
      });

  py::class_<DerivativeReport>(m, "DerivativeReport")
      .def_readonly("rank", &DerivativeReport::rank)
      .def_property_readonly("degree", [](const DerivativeReport& r) { return opt_int(r.degree); })
      .def_property_readonly("top_points",
                             [](const DerivativeReport& r) { return opt_points(r.top_points); })
      .def_property_readonly("chain_length",
                             [](const DerivativeReport& r) { return r.chain.size(); })
      .def("__repr__", [](const DerivativeReport& r) {
        return "<DerivativeReport rank=" + to_string(r.rank) + ">";
      });

  py::class_<Profile>(m, "Profile")
      .def_readonly("rank", &Profile::rank)
      .def_property_readonly("degree", [](const Profile& p) { return opt_int(p.degree); })
      .def_property_readonly("top_points", [](const Profile& p) { return opt_points(p.top_points); })
      .def_property_readonly("espec", [](const Profile& p) { return to_string(p.espec); })
      .def("__repr__",
           [](const Profile& p) { return "<Profile rank=" + to_string(p.rank) + ">"; });

  py::class_<FamilyExpr>(m, "FamilyExpr")
      .def(py::init([](const std::string& text) { return parse_family(text); }))
      .def("__str__", [](const FamilyExpr& e) { return to_string(e); })
      .def("__repr__", [](const FamilyExpr& e) { return "FamilyExpr('" + to_string(e) + "')"; });

  py::class_<TraceAlgebra>(m, "TraceAlgebra")
      .def(py::init<PathAutomaton>())
      .def("trace_eq", &TraceAlgebra::trace_eq)
      .def("is_atom", &TraceAlgebra::is_atom)
      .def("is_superatomic", &TraceAlgebra::is_superatomic)
      .def("cb_invariants", &TraceAlgebra::cb_invariants);

  m.def("parse_family", &parse_family);
  m.def("canon_expand", &canon_expand);
  m.def("evaluate", &evaluate);
  m.def("compile_family", &compile);
  m.def("is_compilable", &is_compilable);
  m.def("enumerate_generators", &enumerate_generators);

  m.def("membership", &membership);
  m.def("set_union", py::overload_cast<const PathAutomaton&, const PathAutomaton&>(&set_union));
  m.def("set_intersection",
        py::overload_cast<const PathAutomaton&, const PathAutomaton&>(&set_intersection));
  m.def("restrict_to", &restrict_to);
  m.def("set_eq", &set_eq);
  m.def("derivative", py::overload_cast<const PathAutomaton&>(&derivative));
  m.def("rank_degree", py::overload_cast<const PathAutomaton&>(&rank_degree));
  m.def("kernel", &kernel);
  m.def("cardinality_class",
        [](const PathAutomaton& a) { return to_string(cardinality_class(a)); });
  m.def("is_accumulation_point", &is_accumulation_point);
  m.def("point_rank", &point_rank);
  m.def("find_accumulation_point", &find_accumulation_point);
  m.def("decompose_alpha_minimal", &decompose_alpha_minimal);
  m.def("least_generating_set_info", [](const PathAutomaton& a) {
    const GeneratingSetInfo info = least_generating_set_info(a);
    py::dict out;
    out["exists"] = info.exists;
    py::list generators;
    for (const auto& fam : info.families) {
      py::dict g;
      g["state"] = fam.state;
      g["access"] = fam.access;
      g["point"] = fam.point;
      generators.append(g);
    }
    out["generators"] = generators;
    out["counterexample"] =
        info.counterexample ? py::cast(*info.counterexample) : py::object(py::none());
    return out;
  });
  m.def("two_tree_witness", [](const PathAutomaton& a) -> py::object {
    const auto w = two_tree_witness(a);
    if (!w)
      return py::none();
    py::dict out;
    out["state"] = w->state;
    out["access"] = w->access;
    out["word0"] = w->word0;
    out["word1"] = w->word1;
    return out;
  });

  m.def("iso_equivalent", &iso_equivalent);

  m.def("rank_degree_naive",
        [](const PathAutomaton& a) { return naive::rank_degree(a); });
  m.def("isolation_bruteforce", [](const PathAutomaton& a, const UPWord& w, std::size_t k_max) {
    return naive::isolation_bruteforce(a, w, k_max) == naive::Isolation::Isolated;
  });

  m.def("parse_ordinal", &parse_ordinal);
  m.def("parse_upword", &parse_upword);
  m.def("parse_clopen", &parse_clopen);
  m.def("parse_automaton", [](const std::string& text) { return prune(parse_automaton(text)); });

  m.def(
      "run_check_suite",
      [](std::uint64_t seed) {
        const suite::SuiteResult r = suite::run_check_suite(seed);
        return py::make_tuple(r.pass, suite::format_report(r));
      },
      py::arg("seed") = suite::kDefaultSeed);
}
