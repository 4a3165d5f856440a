#include "modr/complex.hpp"
#include "modr/deform.hpp"
#include "modr/doubling.hpp"
#include "modr/errors.hpp"
#include "modr/graded.hpp"
#include "modr/io.hpp"
#include "modr/rmatrix.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace modr;

namespace pybind11::detail {

// Rationals travel as fractions.Fraction; ints and "p/q" strings are accepted on input.
template <> struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr()) || PyBool_Check(src.ptr()))
      return false;
    try {
      if (PyLong_Check(src.ptr())) {
        value = parse_rational(py::str(src).cast<std::string>());
        return true;
      }
      if (py::isinstance<py::str>(src)) {
        value = parse_rational(src.cast<std::string>());
        return true;
      }
      if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
        value = parse_rational(py::str(src.attr("numerator")).cast<std::string>() + "/" +
                               py::str(src.attr("denominator")).cast<std::string>());
        return true;
      }
    } catch (const InputError &) {
    }
    return false;
  }

  static handle cast(const Rational &q, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    static py::object to_int = py::module_::import("builtins").attr("int");
    const py::object num = to_int(numerator(q).str());
    const py::object den = to_int(denominator(q).str());
    return fraction(num, den).release();
  }
};

template <> struct type_caster<Vector> {
  PYBIND11_TYPE_CASTER(Vector, const_name("list[fractions.Fraction]"));

  bool load(handle src, bool convert) {
    make_caster<std::vector<Rational>> inner;
    if (!inner.load(src, convert))
      return false;
    value = Vector(cast_op<std::vector<Rational> &&>(std::move(inner)));
    return true;
  }

  static handle cast(const Vector &v, return_value_policy policy, handle parent) {
    return make_caster<std::vector<Rational>>::cast(v.coeffs(), policy, parent);
  }
};

} // namespace pybind11::detail

namespace {

py::object optional_pair(const std::optional<BasisPair> &p) {
  if (!p)
    return py::none();
  return py::make_tuple(p->first, p->second);
}

py::object optional_triple(const std::optional<Triple> &t) {
  if (!t)
    return py::none();
  return py::make_tuple((*t)[0], (*t)[1], (*t)[2]);
}

Endo endo_from_rows(const LieAlgebra &g, const std::vector<std::vector<Rational>> &rows) {
  linalg::Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw InputError("matrix rows have different lengths");
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = rows[i][j];
  }
  return Endo(g, std::move(m));
}

std::vector<std::vector<Rational>> endo_rows(const Endo &f) {
  std::vector<std::vector<Rational>> rows(f.dim(), std::vector<Rational>(f.dim()));
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j)
      rows[i][j] = f.matrix()(i, j);
  return rows;
}

py::dict degree_dict(const DegreeReport &d) {
  py::dict out;
  out["degree"] = d.degree;
  out["cochains"] = d.dim_cochains;
  out["cocycles"] = d.dim_cocycles;
  out["coboundaries"] = d.dim_coboundaries;
  out["cohomology"] = d.dim_cohomology;
  out["representatives"] = d.cohomology_representatives;
  return out;
}

} // namespace

PYBIND11_MODULE(_modr, m) {
  m.doc() = "Exact computations with modified r-matrices on Lie algebras";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_static(
          "from_json",
          [](const std::string &text) { return io::algebra_from_json(io::Json::parse(text)); },
          py::arg("text"))
      .def("to_json", [](const LieAlgebra &g) { return io::algebra_to_json(g).dump(); })
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("basis_names", &LieAlgebra::basis_names)
      .def("bracket", &LieAlgebra::bracket, py::arg("x"), py::arg("y"))
      .def("is_abelian", &LieAlgebra::is_abelian)
      .def("__repr__", [](const LieAlgebra &g) {
        return "<LieAlgebra dim=" + std::to_string(g.dim()) + ">";
      });

  py::class_<Endo>(m, "Endo")
      .def(py::init(&endo_from_rows), py::arg("algebra"), py::arg("rows"))
      .def_static("identity", &Endo::identity)
      .def_static("zero", &Endo::zero)
      .def_property_readonly("algebra", &Endo::algebra)
      .def_property_readonly("rows", &endo_rows)
      .def("__call__", &Endo::operator(), py::arg("x"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def("__rmul__", [](const Endo &f, const Rational &s) { return s * f; })
      .def(py::self == py::self);

  py::class_<Cochain>(m, "Cochain")
      .def(py::init<LieAlgebra, std::size_t>(), py::arg("algebra"), py::arg("arity"))
      .def(py::init<LieAlgebra, std::size_t, std::vector<Rational>>(), py::arg("algebra"),
           py::arg("arity"), py::arg("coeffs"))
      .def_static("from_endo", &Cochain::from_endo)
      .def_static("from_vector", &Cochain::from_vector)
      .def_static("bracket_cochain", &Cochain::bracket_cochain)
      .def("to_endo", &Cochain::to_endo)
      .def("to_vector", &Cochain::to_vector)
      .def("to_json", [](const Cochain &c) { return io::cochain_to_json(c).dump(); })
      .def_property_readonly("arity", &Cochain::arity)
      .def_property_readonly("degree", &Cochain::degree)
      .def_property_readonly("coeffs", py::overload_cast<>(&Cochain::coeffs, py::const_))
      .def("eval", &Cochain::eval, py::arg("args"))
      .def("is_zero", &Cochain::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__rmul__", [](const Cochain &c, const Rational &s) { return s * c; })
      .def(py::self == py::self);

  m.def(
      "catalog",
      [](const std::string &name, std::size_t n) {
        CatalogEntry c = catalog(name, n);
        return py::make_tuple(c.algebra, c.r_matrix);
      },
      py::arg("name"), py::arg("n") = 0, "Catalog algebra and its r-matrix as (algebra, map).");

  m.def("verify_jacobi", [](const LieAlgebra &g) {
    const JacobiResult j = verify_jacobi(g);
    return py::make_tuple(j.holds, optional_triple(j.counterexample));
  });
  m.def("ad", &ad);

  m.def("mcybe_defect", [](const Endo &r) {
    const DefectReport d = mcybe_defect(r);
    py::dict out;
    out["is_zero"] = d.is_zero;
    out["pair"] = optional_pair(d.worst_pair);
    out["defect"] = d.defect;
    return out;
  });
  m.def(
      "is_rota_baxter",
      [](const Endo &b, const Rational &weight) {
        const RotaBaxterVerdict v = is_rota_baxter(b, weight);
        return py::make_tuple(v.holds, optional_pair(v.failing_pair));
      },
      py::arg("b"), py::arg("weight"));
  m.def("rb_from_r", &rb_from_r);
  m.def("r_from_rb", &r_from_rb);
  m.def("induced_bracket", &induced_bracket);
  m.def("rho", &rho, py::arg("r"), py::arg("x"));

  m.def("coboundary", &coboundary, py::arg("r"), py::arg("f"));
  m.def("is_cocycle", &is_cocycle, py::arg("r"), py::arg("f"));
  m.def(
      "cohomology",
      [](const Endo &r, std::size_t max_degree, bool witnesses) {
        const CohomologyReport rep = cohomology(r, {max_degree, witnesses});
        py::list out;
        for (const auto &d : rep.degrees)
          out.append(degree_dict(d));
        return out;
      },
      py::arg("r"), py::arg("max_degree") = 3, py::arg("witnesses") = false);

  m.def("graded_bracket", &graded_bracket, py::arg("f"), py::arg("g"));
  m.def("satisfies_mc_modified", &satisfies_mc_modified);
  m.def("is_maurer_cartan_weight0", &is_maurer_cartan_weight0);
  m.def("kuranishi", [](const Endo &r, const Endo &f) {
    const KuranishiReport k = kuranishi(r, f);
    py::dict out;
    out["ff"] = k.ff;
    out["is_cocycle"] = k.is_cocycle;
    out["vanishes_in_h3"] = k.vanishes_in_h3;
    out["witness"] = k.witness ? py::cast(*k.witness) : py::none();
    return out;
  });

  m.def("check_linear_deformation", [](const Endo &r, const Endo &rhat) {
    const DeformationVerdict v = check_linear_deformation(r, rhat);
    py::dict out;
    out["cocycle"] = v.cocycle_ok;
    out["weight0"] = v.weight0_ok;
    out["valid"] = v.valid;
    out["pair"] = optional_pair(v.failing_pair);
    return out;
  });
  m.def("nijenhuis_check", [](const Endo &r, const Vector &x) {
    const NijenhuisVerdict v = nijenhuis_check(r, x);
    py::dict out;
    out["eq1"] = v.eq1_ok;
    out["eq2"] = v.eq2_ok;
    out["is_nijenhuis_element"] = v.is_nijenhuis_element;
    return out;
  });
  m.def("trivial_deformation",
        [](const Endo &r, const Vector &x) { return trivial_deformation(r, x).rhat; });
  m.def("check_equivalence", [](const Endo &r, const Endo &r1, const Endo &r2, const Vector &x) {
    return check_equivalence(r, r1, r2, x).equivalent();
  });
  m.def(
      "compatible_bracket_check",
      [](const Endo &r, const Endo &rhat, const Rational &t1, const Rational &t2) {
        const CompatibleVerdict v = compatible_bracket_check(r, rhat, t1, t2);
        return v.jacobi_holds && v.equals_twice_midpoint;
      },
      py::arg("r"), py::arg("rhat"), py::arg("t1"), py::arg("t2"));

  m.def("graph_is_subalgebra",
        [](const Endo &r) { return graph_complement(r).graph.is_subalgebra; });
  m.def("complement_certificate", [](const Endo &r) {
    const ComplementCert c = complement_certificate(r);
    py::dict out;
    out["stacked_rank"] = c.stacked_rank;
    out["total_dim"] = c.total_dim;
    out["passes"] = c.passes();
    return out;
  });
  m.def("involutive_analyze", [](const Endo &r) {
    const InvolutiveReport v = involutive_analyze(r);
    py::dict out;
    out["mcybe"] = v.mcybe;
    out["nijenhuis"] = v.nijenhuis;
    out["eigenspaces_subalgebras"] = v.eigenspaces_subalgebras;
    out["product_structure"] = v.product_structure;
    return out;
  });
}
