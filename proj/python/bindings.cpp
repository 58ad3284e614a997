#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "pauliset/anticommuting.hpp"
#include "pauliset/commuting.hpp"
#include "pauliset/counting.hpp"
#include "pauliset/errors.hpp"
#include "pauliset/group.hpp"
#include "pauliset/oracle.hpp"
#include "pauliset/pauli.hpp"
#include "pauliset/rng.hpp"

namespace py = pybind11;
using namespace pauliset;

namespace {

py::object to_pyint(const BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximal commuting and anticommuting Pauli set toolkit";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Pauli>(m, "Pauli")
      .def(py::init<std::size_t>(), py::arg("n"),
           "the identity element on n factors")
      .def_static("parse", &Pauli::parse, py::arg("text"))
      .def_property_readonly("n", &Pauli::n)
      .def("is_identity", &Pauli::is_identity)
      .def("factor", &Pauli::factor, py::arg("k"))
      .def("commute", &Pauli::commute, py::arg("other"))
      .def("str", &Pauli::str)
      .def("__str__", &Pauli::str)
      .def("__repr__",
           [](const Pauli& p) { return "Pauli.parse(\"" + p.str() + "\")"; })
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__hash__", &Pauli::hash);

  py::class_<PauliSet>(m, "PauliSet")
      .def(py::init<>())
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_static("parse", &PauliSet::parse, py::arg("text"))
      .def("insert", &PauliSet::insert, py::arg("p"))
      .def("contains", &PauliSet::contains, py::arg("p"))
      .def("__contains__", &PauliSet::contains)
      .def("__len__", &PauliSet::size)
      .def_property_readonly("n", &PauliSet::n)
      .def("__getitem__",
           [](const PauliSet& s, std::size_t idx) {
             if (idx >= s.size()) throw py::index_error();
             return s[idx];
           })
      .def(
          "__iter__",
          [](const PauliSet& s) { return py::make_iterator(s.begin(), s.end()); },
          py::keep_alive<0, 1>())
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("sorted", &PauliSet::sorted)
      .def("str", &PauliSet::str)
      .def("__str__", &PauliSet::str)
      .def("__repr__", [](const PauliSet& s) {
        std::string out = "PauliSet.parse(\"";
        for (std::size_t k = 0; k < s.size(); ++k)
          out += (k == 0 ? "" : "\\n") + s[k].str();
        return out + "\")";
      });

  m.def("commute", py::overload_cast<const Pauli&, const Pauli&>(&commute),
        py::arg("p"), py::arg("q"));
  m.def("product", &product, py::arg("p"), py::arg("q"));
  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
  m.def("tensor_prefix", &tensor_prefix, py::arg("label"), py::arg("s"));
  m.def("product_of_set", &product_of_set, py::arg("s"));

  m.def("rank", &rank, py::arg("g"));
  m.def("is_minimal_generating", &is_minimal_generating, py::arg("g"));
  m.def("generated_set", &generated_set, py::arg("g"),
        py::arg("max_rank") = 24);
  m.def("minimal_generating_set", &minimal_generating_set, py::arg("s"));
  m.def("map_census", &map_census, py::arg("g"), py::arg("max_n") = 12);
  m.def("coset_anticommuting_element", &coset_anticommuting_element,
        py::arg("t"), py::arg("p"), py::arg("validate") = false);

  py::class_<CommutativityMap>(m, "CommutativityMap")
      .def_readonly("base", &CommutativityMap::base)
      .def_readonly("signs", &CommutativityMap::signs)
      .def("f", &CommutativityMap::f)
      .def("mask", &CommutativityMap::mask);
  m.def("commutativity_map", &commutativity_map, py::arg("p"), py::arg("base"));
  m.def("subset_flip", &subset_flip, py::arg("v"), py::arg("t"));

  m.def("is_commuting", &is_commuting, py::arg("s"));
  m.def("is_maximally_commuting", &is_maximally_commuting, py::arg("s"));

  py::class_<Decomposition>(m, "Decomposition")
      .def_readonly("c_i", &Decomposition::c_i)
      .def_readonly("c_x", &Decomposition::c_x)
      .def_readonly("c_y", &Decomposition::c_y)
      .def_readonly("c_z", &Decomposition::c_z)
      .def_property_readonly(
          "uvw",
          [](const Decomposition& d) {
            return std::string(d.uvw.begin(), d.uvw.end());
          })
      .def("part", &Decomposition::part, py::arg("label"),
           py::return_value_policy::reference_internal)
      .def("reassemble", &Decomposition::reassemble);
  m.def("decompose", &decompose, py::arg("s"));
  m.def("lift_commuting", &lift_commuting, py::arg("s"), py::arg("label"));
  m.def(
      "compose_commuting",
      [](const PauliSet& c_i, const PauliSet& c_x, const PauliSet& c_y,
         const PauliSet& c_z, const std::string& perm) {
        if (perm.size() != 3)
          throw ArgumentError("compose_commuting: perm must permute x, y, z");
        return compose_commuting(c_i, c_x, c_y, c_z,
                                 {perm[0], perm[1], perm[2]});
      },
      py::arg("c_i"), py::arg("c_x"), py::arg("c_y"), py::arg("c_z"),
      py::arg("perm"));

  py::class_<CommutingStructureReport>(m, "CommutingStructureReport")
      .def_property_readonly(
          "case_label",
          [](const CommutingStructureReport& r) {
            return std::string(1, r.case_label);
          })
      .def_property_readonly(
          "uvw",
          [](const CommutingStructureReport& r) {
            return std::string(r.uvw.begin(), r.uvw.end());
          })
      .def_readonly("part_sizes", &CommutingStructureReport::part_sizes)
      .def_readonly("subsets_verified",
                    &CommutingStructureReport::subsets_verified);
  m.def("verify_commuting_structure", &verify_commuting_structure,
        py::arg("s"));
  m.def(
      "random_maximal_commuting",
      [](std::size_t n, std::uint64_t seed, std::size_t max_rank) {
        Rng rng(seed);
        return random_maximal_commuting(n, rng, max_rank);
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("max_rank") = 24);

  m.def("is_anticommuting", &is_anticommuting, py::arg("s"));
  m.def("is_maximally_anticommuting", &is_maximally_anticommuting,
        py::arg("s"));
  m.def("complete_even", &complete_even, py::arg("s"));

  py::class_<StructureCase>(m, "StructureCase")
      .def_property_readonly(
          "label",
          [](const StructureCase& c) { return std::string(1, c.label); })
      .def_property_readonly(
          "uvw",
          [](const StructureCase& c) {
            return std::string(c.uvw.begin(), c.uvw.end());
          })
      .def_readonly("sizes", &StructureCase::sizes);
  m.def("classify_structure", &classify_structure, py::arg("s"));

  py::class_<MaximumStructureReport>(m, "MaximumStructureReport")
      .def_readonly("part_sizes", &MaximumStructureReport::part_sizes)
      .def_readonly("part_product", &MaximumStructureReport::part_product)
      .def_readonly("identity_product",
                    &MaximumStructureReport::identity_product);
  m.def("verify_maximum_structure", &verify_maximum_structure, py::arg("s"));

  m.def("shrink_triple", &shrink_triple, py::arg("s"), py::arg("triple"));
  m.def("construct_maximum", &construct_maximum, py::arg("n"));
  m.def("construct_doubling", &construct_doubling, py::arg("g"));
  m.def("construct_zip", &construct_zip, py::arg("sets"));
  m.def("extend_one_deterministic", &extend_one_deterministic, py::arg("s"),
        py::arg("q"));

  py::class_<ExtendStats>(m, "ExtendStats")
      .def_readonly("samples", &ExtendStats::samples)
      .def_readonly("accepted", &ExtendStats::accepted);
  m.def(
      "extend_to_maximum",
      [](const PauliSet& g, std::uint64_t seed, bool with_stats) {
        ExtendStats stats;
        PauliSet result = extend_to_maximum(g, seed, &stats);
        if (!with_stats) return py::cast(result);
        return py::cast(std::make_pair(result, stats));
      },
      py::arg("g"), py::arg("seed") = 0, py::arg("with_stats") = false);

  m.def("xyz_only", &xyz_only, py::arg("s"));
  m.def("xyz_max_search", &xyz_max_search, py::arg("n"), py::arg("max_n") = 3);

  m.def("count_commuting_extensions",
        [](std::size_t n, std::size_t m_, std::size_t m_prime) {
          return to_pyint(count_commuting_extensions(n, m_, m_prime));
        },
        py::arg("n"), py::arg("m"), py::arg("m_prime"));
  m.def("count_generating_sets_of_subgroup",
        [](std::size_t m_) {
          return to_pyint(count_generating_sets_of_subgroup(m_));
        },
        py::arg("m"));
  m.def("count_commuting_subgroups",
        [](std::size_t n, std::size_t m_) {
          return to_pyint(count_commuting_subgroups(n, m_));
        },
        py::arg("n"), py::arg("m"));
  m.def("count_maximal_commuting",
        [](std::size_t n) { return to_pyint(count_maximal_commuting(n)); },
        py::arg("n"));
  m.def("count_anticommuting_extensions",
        [](std::size_t n, std::size_t m_, std::size_t m_prime) {
          return to_pyint(count_anticommuting_extensions(n, m_, m_prime));
        },
        py::arg("n"), py::arg("m"), py::arg("m_prime"));
  m.def("count_maximal_anticommuting",
        [](std::size_t n, std::size_t m_) {
          return to_pyint(count_maximal_anticommuting(n, m_));
        },
        py::arg("n"), py::arg("m"));

  py::module_ orc = m.def_submodule("oracle", "brute-force ground truth");
  orc.def("all_elements", &oracle::all_elements, py::arg("n"));
  orc.def("enumerate_maximal_commuting", &oracle::enumerate_maximal_commuting,
          py::arg("n"));
  orc.def("enumerate_maximal_anticommuting",
          &oracle::enumerate_maximal_anticommuting, py::arg("n"), py::arg("m"));
  orc.def("all_minimal_generating_sets", &oracle::all_minimal_generating_sets,
          py::arg("n"), py::arg("anticommuting_only") = false);
  py::class_<oracle::CensusReport>(orc, "CensusReport")
      .def_readonly("n", &oracle::CensusReport::n)
      .def_readonly("generating_sets_checked",
                    &oracle::CensusReport::generating_sets_checked)
      .def_readonly("anticommuting_sets_checked",
                    &oracle::CensusReport::anticommuting_sets_checked)
      .def_readonly("cosets_checked", &oracle::CensusReport::cosets_checked);
  orc.def("census_check", &oracle::census_check, py::arg("n"),
          py::arg("random_cases") = 500, py::arg("seed") = 0);
  orc.def("xyz_commuting_max_size", &oracle::xyz_commuting_max_size,
          py::arg("n"));
}
