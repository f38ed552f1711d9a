#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cactus/cayley.hpp"
#include "cactus/confspace.hpp"
#include "cactus/equiv.hpp"
#include "cactus/j3.hpp"
#include "cactus/perm.hpp"
#include "cactus/words.hpp"

namespace py = pybind11;
using namespace cactus;

namespace {

Word word_from(const py::object& obj, int degree) {
  if (py::isinstance<Word>(obj)) return obj.cast<Word>();
  return parse_word(obj.cast<std::string>(), degree);
}

}  // namespace

PYBIND11_MODULE(_cactus, m) {
  m.doc() = "Cactus group words, J_3 canonical forms, Cayley windows, and the "
            "PJ_3 / X(4) correspondence";

  auto base = py::register_exception<Error>(m, "CactusError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  py::class_<Generator>(m, "Generator")
      .def(py::init<int, int, int>(), py::arg("p"), py::arg("q"), py::arg("n"))
      .def_property_readonly("p", &Generator::p)
      .def_property_readonly("q", &Generator::q)
      .def_property_readonly("degree", &Generator::degree)
      .def("__str__", &Generator::to_string)
      .def("__repr__", [](const Generator& g) { return "Generator(" + g.to_string() + ")"; })
      .def(py::self == py::self);

  py::class_<Word>(m, "Word")
      .def(py::init([](const std::string& text, int degree) {
             return parse_word(text, degree);
           }),
           py::arg("text") = "", py::arg("degree") = 3)
      .def_property_readonly("degree", &Word::degree)
      .def_property_readonly("letters", [](const Word& w) {
        return std::vector<Generator>(w.letters().begin(), w.letters().end());
      })
      .def("__len__", &Word::size)
      .def("__str__", &Word::to_string)
      .def("__repr__", [](const Word& w) { return "Word('" + w.to_string() + "')"; })
      .def("__mul__", &Word::operator*)
      .def("inverse", &Word::inverse)
      .def("power", &Word::power)
      .def(py::self == py::self);

  m.def("free_reduce", [](const py::object& w, int n) { return free_reduce(word_from(w, n)); },
        py::arg("word"), py::arg("degree") = 3);
  m.def("equal_by_search",
        [](const py::object& a, const py::object& b, std::size_t cap, std::size_t budget,
           int n) {
          return equal_by_search(word_from(a, n), word_from(b, n), cap, budget) ==
                 SearchResult::Equal;
        },
        py::arg("w1"), py::arg("w2"), py::arg("length_cap") = 6,
        py::arg("node_budget") = 10000, py::arg("degree") = 3);

  m.def("project",
        [](const py::object& w, int n) { return project(word_from(w, n)).images(); },
        py::arg("word"), py::arg("degree") = 3);
  m.def("is_pure", [](const py::object& w, int n) { return is_pure(word_from(w, n)); },
        py::arg("word"), py::arg("degree") = 3);

  py::class_<CanonicalJ3>(m, "CanonicalJ3")
      .def(py::init([](std::int64_t mm, int eps) { return CanonicalJ3{mm, eps}; }),
           py::arg("m") = 0, py::arg("eps") = 0)
      .def_readonly("m", &CanonicalJ3::m)
      .def_readonly("eps", &CanonicalJ3::eps)
      .def_property_readonly("length", &CanonicalJ3::length)
      .def("__str__", &CanonicalJ3::to_string)
      .def("__repr__", &CanonicalJ3::to_string)
      .def("__mul__", &mul)
      .def("__hash__", [](const CanonicalJ3& c) { return py::hash(py::make_tuple(c.m, c.eps)); })
      .def(py::self == py::self)
      .def(py::self < py::self);

  m.def("canonicalize", [](const py::object& w) { return canonicalize(word_from(w, 3)); },
        py::arg("word"));
  m.def("from_index", &from_index);
  m.def("to_word", &to_word);
  m.def("mul", &mul);
  m.def("inv", &inv);
  m.def("in_subgroup_2", &in_subgroup_2);
  m.def("pure_element", &pure_element);
  m.def("evaluate_word", [](const py::object& w) {
    const auto f = evaluate_word(word_from(w, 3));
    return py::make_tuple(f.sign, f.shift);
  });

  m.def("cayley_window",
        [](const std::string& group, std::int64_t radius) {
          const auto g = build_window(parse_cayley_group(group), radius);
          py::list edges;
          for (const auto& e : g.edges) {
            edges.append(py::make_tuple(e.source, e.target, e.generator.to_string()));
          }
          return py::make_tuple(g.vertices, edges);
        },
        py::arg("group"), py::arg("radius"));
  m.def("export_dot",
        [](const std::string& group, std::int64_t radius) {
          return export_dot(build_window(parse_cayley_group(group), radius));
        },
        py::arg("group"), py::arg("radius"));
  m.def("export_json",
        [](const std::string& group, std::int64_t radius) {
          return export_json(build_window(parse_cayley_group(group), radius));
        },
        py::arg("group"), py::arg("radius"));

  m.def("canonical_chamber",
        [](const std::vector<int>& seq) { return canonical_chamber(seq).name(); });
  m.def("chamber_adjacent", [](const std::string& a, const std::string& b) {
    return chamber_adjacent(parse_chamber(a), parse_chamber(b));
  });
  m.def("enumerate_chambers", [](int n) {
    std::vector<std::string> names;
    for (const auto& c : enumerate_chambers(n)) names.push_back(c.name());
    return names;
  });

  py::class_<CoverVertex>(m, "CoverVertex")
      .def(py::init([](const std::string& text) { return parse_cover_vertex(text); }))
      .def_property_readonly("label", [](const CoverVertex& v) { return to_string(v.label); })
      .def_readonly("k", &CoverVertex::k)
      .def("__str__", &CoverVertex::to_string)
      .def("__repr__", [](const CoverVertex& v) { return "CoverVertex('" + v.to_string() + "')"; })
      .def(py::self == py::self);

  m.def("cover_window", &cover_window, py::arg("K"));
  m.def("deck_act", [](std::int64_t j, const CoverVertex& v) { return deck_act({j}, v); });
  m.def("covering_map", [](const CoverVertex& v) { return covering_map(v).name(); });

  m.def("gamma0", [](std::int64_t k, const CanonicalJ3& h) { return gamma0({k}, h); },
        py::arg("k"), py::arg("h"));
  m.def("phi0", &phi0);
  m.def("phi0_inv", &phi0_inv);
  m.def("iso_h", [](std::int64_t k) { return iso_h({k}).j; });
  m.def("iso_h_inv", [](std::int64_t j) { return iso_h_inv({j}).k; });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("failures", &VerificationReport::failures)
      .def_readonly("total", &VerificationReport::total)
      .def_property_readonly("ok", &VerificationReport::ok)
      .def("__str__", &VerificationReport::to_text);

  m.def("check_equivariance",
        [](std::int64_t jmin, std::int64_t jmax, std::int64_t kmin, std::int64_t kmax) {
          return check_equivariance({jmin, jmax}, {kmin, kmax});
        },
        py::arg("jmin") = -20, py::arg("jmax") = 20, py::arg("kmin") = -50,
        py::arg("kmax") = 50);
  m.def("verify_action_axioms",
        [](std::int64_t kmin, std::int64_t kmax, std::int64_t mmin, std::int64_t mmax) {
          return verify_action_axioms({kmin, kmax}, {mmin, mmax});
        },
        py::arg("kmin") = -10, py::arg("kmax") = 10, py::arg("mmin") = -60,
        py::arg("mmax") = 60);
  m.def("verify_iso",
        [](std::int64_t kmin, std::int64_t kmax) { return verify_iso({kmin, kmax}); },
        py::arg("kmin") = -15, py::arg("kmax") = 15);
  m.def("verify_affine_oracle", &verify_affine_oracle, py::arg("max_length") = 8);
}
