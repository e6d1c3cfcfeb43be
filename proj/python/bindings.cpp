#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reflalg/presentations.hpp"

namespace py = pybind11;
using namespace reflalg;

namespace {

py::list suite_rows(const SuiteReport& r) {
  py::list out;
  for (const auto& res : r.results) {
    out.append(py::make_tuple(res.label, res.ok(), res.residual_terms(), res.residual.str()));
  }
  return out;
}

Var parse_var(const std::string& name) {
  for (Var v : {Var::x, Var::y, Var::z, Var::mu0}) {
    if (var_name(v) == name) return v;
  }
  throw py::value_error("unknown indeterminate " + name);
}

}  // namespace

PYBIND11_MODULE(_reflalg, m) {
  m.doc() = "Exact verification of truncated reflection algebras";

  py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_ArithmeticError);

  py::class_<CPoly>(m, "CPoly")
      .def(py::init<long>(), py::arg("value") = 0)
      .def(py::init([](const std::string& q) { return CPoly(Rational::parse(q)); }))
      .def_static("var", [](const std::string& name) { return CPoly::var(parse_var(name)); })
      .def("subst", [](const CPoly& p, const std::string& v, const CPoly& value) { return p.subst(parse_var(v), value); })
      .def("divexact", [](const CPoly& p, const CPoly& d) { return divexact(p, d); })
      .def("is_zero", &CPoly::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__add__", [](const CPoly& p, long c) { return p + CPoly(c); }, py::is_operator())
      .def("__sub__", [](const CPoly& p, long c) { return p - CPoly(c); }, py::is_operator())
      .def("__mul__", [](const CPoly& p, long c) { return p * CPoly(c); }, py::is_operator())
      .def("__radd__", [](const CPoly& p, long c) { return CPoly(c) + p; }, py::is_operator())
      .def("__rsub__", [](const CPoly& p, long c) { return CPoly(c) - p; }, py::is_operator())
      .def("__rmul__", [](const CPoly& p, long c) { return CPoly(c) * p; }, py::is_operator())
      .def("__pow__", &CPoly::pow)
      .def("__str__", &CPoly::str)
      .def("__repr__", [](const CPoly& p) { return "CPoly(" + p.str() + ")"; });

  py::implicitly_convertible<long, CPoly>();

  py::class_<NCPoly>(m, "NCPoly")
      .def(py::init<long>(), py::arg("value") = 0)
      .def(py::init<CPoly>())
      .def_static("e", &NCPoly::e, py::arg("site") = 1)
      .def_static("f", &NCPoly::f, py::arg("site") = 1)
      .def_static("h", &NCPoly::h, py::arg("site") = 1)
      .def("is_zero", &NCPoly::is_zero)
      .def("__len__", &NCPoly::size)
      .def("subst", [](const NCPoly& p, const std::string& v, const CPoly& value) { return p.subst(parse_var(v), value); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * CPoly())
      .def(CPoly() * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__pow__", &NCPoly::pow)
      .def("__str__", &NCPoly::str)
      .def("__repr__", [](const NCPoly& p) { return "NCPoly(" + p.str() + ")"; });
  py::implicitly_convertible<CPoly, NCPoly>();

  m.def("commutator", &commutator);
  m.def("anticommutator", &anticommutator);
  m.def("casimir", &casimir, py::arg("site") = 1);
  m.def("embed", &embed, py::arg("p"), py::arg("shift"));

  py::class_<EulerTable>(m, "EulerTable")
      .def_static("build", &EulerTable::build, py::arg("max_degree"))
      .def_property_readonly("max_degree", &EulerTable::max_degree)
      .def("euler", &EulerTable::euler_cpoly, py::arg("n"))
      .def("bernoulli", [](const EulerTable& t, unsigned n) { return t.bernoulli(n).str(); }, py::arg("n"));
  m.def("check_prE", &check_prE, py::arg("n"), py::arg("table"));
  m.def("check_functional_relation",
        [](unsigned order, const EulerTable& t) { return check_functional_relation(order, t).all_zero(); },
        py::arg("order"), py::arg("table"));

  m.def("yang_baxter_residual_terms", [] { return check_yang_baxter().term_count(); });
  m.def("rll_residual_terms", [](unsigned site) {
    auto r = check_rll(site);
    return py::make_tuple(r.rll.term_count(), r.crossed.term_count());
  }, py::arg("site") = 1);

  py::class_<TowerLevel>(m, "TowerLevel")
      .def_readonly("level", &TowerLevel::level)
      .def_readonly("generators", &TowerLevel::generators)
      .def_readonly("delta", &TowerLevel::delta)
      .def("gen", &TowerLevel::gen)
      .def("reflection_residual_terms", [](const TowerLevel& t) { return check_reflection(t.matrix).term_count(); })
      .def("component", [](const TowerLevel& t, const std::string& which) -> NCPoly {
        if (which == "h") return t.components.h;
        if (which == "hbar") return t.components.hbar;
        if (which == "e") return t.components.e;
        if (which == "f") return t.components.f;
        throw py::key_error(which);
      })
      .def("is_central", [](const TowerLevel& t, const NCPoly& z) {
        for (const auto& [g, r] : is_central(z, t)) {
          if (!r.is_zero()) return false;
        }
        return true;
      });
  m.def("build_tower", [](unsigned max_level, const EulerTable& t) { return build_tower(max_level, t); },
        py::arg("max_level"), py::arg("table"));

  m.def("serre_check", [](const NCPoly& H, const NCPoly& E, const NCPoly& F) { return suite_rows(serre_check(H, E, F)); });
  m.def("check_higgs_n1", [](const TowerLevel& t) { return suite_rows(check_higgs_n1(t)); });
  m.def("check_center_n1", [](const TowerLevel& t) { return suite_rows(check_center_n1(t)); });
  m.def("hahn_check", [](const TowerLevel& t) { return suite_rows(hahn_check(t)); });
  m.def("check_n2", [](const TowerLevel& t) { return suite_rows(check_n2(t)); });
  m.def("check_center_n2", [](const TowerLevel& t) { return suite_rows(check_center_n2(t).centrality); });
}
