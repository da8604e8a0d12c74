#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tamari/census.hpp"
#include "tamari/classifiers.hpp"
#include "tamari/error.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/io.hpp"
#include "tamari/noncrossing.hpp"
#include "tamari/rise_fall.hpp"
#include "tamari/verify.hpp"

namespace py = pybind11;
using namespace tamari;

namespace {

py::object big(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

std::optional<IntervalPoset> as_poset(const RangeRelation& r) {
  auto v = validate(r);
  if (!is_valid(v)) return std::nullopt;
  return std::get<IntervalPoset>(v);
}

py::dict census_dict(int n, int bound) {
  const CensusRow row = census(n, bound);
  py::dict d;
  for (const auto& e : row.entries()) {
    py::dict entry;
    entry["count"] = e.count;
    entry["formula"] = e.formula ? big(*e.formula) : py::none();
    entry["match"] = e.matches();
    d[py::str(e.family)] = entry;
  }
  return d;
}

py::list triangle_rows(const TriangleB& t) {
  py::list rows;
  for (const auto& row : t.values) {
    py::list r;
    for (const auto& v : row) r.append(big(v));
    rows.append(r);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tamari intervals, interval-posets and their bijections";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<BinaryTree>(m, "BinaryTree")
      .def(py::init([](const std::string& text) { return parse_tree(text); }), py::arg("text"))
      .def_static("left_comb", &BinaryTree::left_comb)
      .def_static("right_comb", &BinaryTree::right_comb)
      .def_property_readonly("size", &BinaryTree::size)
      .def("__str__", &format_tree)
      .def("__repr__", [](const BinaryTree& t) { return "BinaryTree('" + format_tree(t) + "')"; })
      .def("__eq__", [](const BinaryTree& a, const BinaryTree& b) { return a == b; })
      .def("__lt__", [](const BinaryTree& a, const BinaryTree& b) { return a < b; })
      .def("__hash__", [](const BinaryTree& t) { return py::hash(py::str(format_tree(t))); });

  py::class_<TamariInterval>(m, "TamariInterval")
      .def(py::init<BinaryTree, BinaryTree>(), py::arg("lower"), py::arg("upper"))
      .def_property_readonly("lower", &TamariInterval::lower)
      .def_property_readonly("upper", &TamariInterval::upper)
      .def("__eq__", [](const TamariInterval& a, const TamariInterval& b) { return a == b; })
      .def("to_json", [](const TamariInterval& i) { return interval_to_json(i).dump(); })
      .def("__repr__", [](const TamariInterval& i) {
        return "TamariInterval('" + format_tree(i.lower()) + "', '" + format_tree(i.upper()) + "')";
      });

  py::class_<IntervalPoset>(m, "IntervalPoset")
      .def(py::init([](int size, const std::vector<Pair>& inc, const std::vector<Pair>& dec) {
             return IntervalPoset::from_relations(size, inc, dec);
           }),
           py::arg("size"), py::arg("inc") = std::vector<Pair>{}, py::arg("dec") = std::vector<Pair>{})
      .def_static("from_json", [](const std::string& s) { return poset_from_json(parse_json(s)); })
      .def("to_json", [](const IntervalPoset& p) { return poset_to_json(p).dump(); })
      .def_property_readonly("size", &IntervalPoset::size)
      .def("related", &IntervalPoset::related)
      .def_property_readonly("increasing", &IntervalPoset::increasing)
      .def_property_readonly("decreasing", &IntervalPoset::decreasing)
      .def("__eq__", [](const IntervalPoset& a, const IntervalPoset& b) { return a == b; })
      .def("__hash__", [](const IntervalPoset& p) { return py::hash(py::str(poset_to_json(p).dump())); })
      .def("__repr__", [](const IntervalPoset& p) { return "IntervalPoset(" + poset_to_json(p).dump() + ")"; });

  m.def("enumerate_trees", &enumerate_trees, py::arg("n"));
  m.def("enumerate_intervals", &enumerate_intervals, py::arg("n"));
  m.def("enumerate_interval_posets", &enumerate_interval_posets, py::arg("n"));
  m.def("tamari_leq", &tamari_leq);
  m.def("graft", &graft, py::arg("t"), py::arg("i"), py::arg("s"));
  m.def("tree_poset", &tree_poset);
  m.def("from_interval", &from_interval);
  m.def("to_interval", &to_interval);

  m.def("is_exceptional", &is_exceptional);
  m.def("is_modern", &is_modern);
  m.def("is_new", &is_new_ip);
  m.def("is_infinitely_modern", &is_infinitely_modern);
  m.def("stat", [](const IntervalPoset& p) {
    const StatPair s = stat(p);
    return py::make_tuple(s.ir, s.dr);
  }, "(ir, dr)");
  m.def("hasse", &hasse);

  m.def("rise", [](const IntervalPoset& p) { return as_poset(rise(p)); },
        "Rise of p, or None when it is not an interval-poset");
  m.def("fall", [](const IntervalPoset& p) { return as_poset(fall(p)); },
        "Fall of p, or None when it is not an interval-poset");
  m.def("insert_fik", &insert_fik, py::arg("p"), py::arg("i"), py::arg("k"));
  m.def("remove_rho", &remove_rho);

  m.def("poset_to_nct", [](const IntervalPoset& p) { return nct_to_json(poset_to_nct(p)).dump(); });
  m.def("nct_to_poset", [](const std::string& s) { return nct_to_poset(nct_from_json(parse_json(s))); });
  m.def("partition_of_tree", [](const BinaryTree& t) { return partition_of_tree(t).blocks(); });
  m.def("tree_of_partition", [](int n, std::vector<std::vector<int>> blocks) {
    return tree_of_partition(NoncrossingPartition::from_blocks(n, std::move(blocks)));
  });

  m.def("arc_diagram_dot", &arc_diagram_dot);
  m.def("hasse_dot", &hasse_dot);

  m.def("census", &census_dict, py::arg("n"), py::arg("bound") = kDefaultCensusBound);
  m.def("triangle_b", [](int n) {
    const auto t = triangle_b(n);
    return py::make_tuple(triangle_rows(t.by_recurrence), t.agree());
  }, "(rows by recurrence, agrees with the statistic)");
  m.def("verify", [](int max_size) {
    py::list out;
    for (const auto& r : run_verification(max_size, golden_counts())) {
      out.append(py::make_tuple(r.name, r.passed, r.detail));
    }
    return out;
  }, py::arg("max_size") = kDefaultCensusBound);
}
