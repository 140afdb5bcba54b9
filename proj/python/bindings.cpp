// Python module jordangeo._core. Matrices cross the boundary as complex128
// numpy arrays.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jordangeo/io.hpp"
#include "jordangeo/jbtriple.hpp"
#include "jordangeo/manifold.hpp"
#include "jordangeo/peirce.hpp"
#include "jordangeo/random.hpp"
#include "jordangeo/spectral.hpp"
#include "jordangeo/suites.hpp"
#include "jordangeo/triple.hpp"

namespace py = pybind11;
namespace jg = jordangeo;
using jg::Matrix;

namespace {

jg::Tolerance make_tol(double abs, double rel) {
  jg::Tolerance t;
  t.abs = abs;
  t.rel = rel;
  t.validate();
  return t;
}

jg::PeirceSpace space_of(double k) {
  if (k == 1.0) return jg::PeirceSpace::one;
  if (k == 0.5) return jg::PeirceSpace::half;
  if (k == 0.0) return jg::PeirceSpace::zero;
  throw py::value_error("Peirce index must be 1, 0.5 or 0");
}

py::object json_to_py(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Peirce calculus and geometry of normal algebraic matrix elements";

  static py::exception<jg::Error> error(m, "JordanGeoError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const jg::Error& e) {
      // args = (kind, message)
      py::tuple args = py::make_tuple(std::string(jg::to_string(e.kind())), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    } catch (const jg::IoError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<jg::Tolerance>(m, "Tolerance")
      .def(py::init(&make_tol), py::arg("abs") = 1e-9, py::arg("rel") = 1e-9)
      .def_readwrite("abs", &jg::Tolerance::abs)
      .def_readwrite("rel", &jg::Tolerance::rel)
      .def_readwrite("fd_step", &jg::Tolerance::fd_step)
      .def("bound", &jg::Tolerance::bound, py::arg("scale") = 0.0)
      .def("__repr__", [](const jg::Tolerance& t) {
        return "Tolerance(abs=" + jg::format_double(t.abs) + ", rel=" + jg::format_double(t.rel) +
               ")";
      });
  const jg::Tolerance dt;
  auto tol = py::arg("tol") = dt;

  // triple products
  m.def("triple_product", &jg::triple_product, "{abc} = (ab*c + cb*a)/2");
  m.def("box", [](const Matrix& a, const Matrix& b) { return jg::box(a, b).kernel(); },
        "column-stacked kernel of z -> {abz}");
  m.def("is_tripotent", &jg::is_tripotent, py::arg("e"), tol);
  m.def("are_orthogonal", &jg::are_orthogonal, py::arg("x"), py::arg("y"), tol);

  // Peirce calculus
  m.def("peirce_part",
        [](const Matrix& e, const Matrix& z, double k, const jg::Tolerance& t) {
          return jg::peirce_part(jg::Tripotent(e, t), z, space_of(k));
        },
        py::arg("e"), py::arg("z"), py::arg("k"), tol);
  m.def("peirce_dimensions",
        [](const Matrix& e, const jg::Tolerance& t) {
          const auto pd = jg::peirce_projections(jg::Tripotent(e, t));
          return py::make_tuple(pd.basis1.size(), pd.basis12.size(), pd.basis0.size());
        },
        py::arg("e"), tol, "complex dimensions of (Z_1, Z_1/2, Z_0)");
  m.def("peirce_reflection",
        [](const Matrix& e, const Matrix& z, const jg::Tolerance& t) {
          return jg::peirce_reflection(jg::Tripotent(e, t)).apply(z);
        },
        py::arg("e"), py::arg("z"), tol);

  // spectral algebra
  m.def("is_normal", &jg::is_normal, py::arg("a"), tol);
  m.def("spectral_resolution",
        [](const Matrix& a, const jg::Tolerance& t) {
          const auto r = jg::spectral_resolution(a, t);
          py::dict d;
          d["values"] = r.values;
          d["ranks"] = r.ranks;
          d["projections"] = r.projections;
          d["kernel_rank"] = r.kernel_rank;
          return d;
        },
        py::arg("a"), tol);
  m.def("signature",
        [](const Matrix& a, const jg::Tolerance& t) {
          const auto s = jg::signature(a, t);
          return py::make_tuple(s.values, s.ranks);
        },
        py::arg("a"), tol, "(values, ranks), values in (Re, Im) order");
  m.def("support", [](const Matrix& a, const jg::Tolerance& t) {
    return jg::support(a, t).projection;
  }, py::arg("a"), tol);
  m.def("unitary_connect", &jg::unitary_connect, py::arg("a"), py::arg("b"), tol);

  // manifold geometry
  m.def("tangent_space_basis", &jg::tangent_space_basis, py::arg("a"), tol);
  m.def("is_tangent", [](const Matrix& a, const Matrix& u, const jg::Tolerance& t) {
    return jg::is_tangent(a, u, t).tangent;
  }, py::arg("a"), py::arg("u"), tol);
  m.def("phi", &jg::phi, py::arg("a"), py::arg("x"), tol);
  m.def("phi_restricted_inverse", &jg::phi_restricted_inverse, py::arg("a"), py::arg("y"), tol);
  m.def("chart", &jg::chart, py::arg("a"), py::arg("u"), tol);
  m.def("geodesic",
        [](const Matrix& a, const Matrix& u, const std::vector<double>& ts,
           const jg::Tolerance& t) {
          const jg::Geodesic g = jg::make_geodesic(a, u, t);
          std::vector<Matrix> out;
          for (double s : ts) out.push_back(jg::geodesic_point(g, s));
          return out;
        },
        py::arg("a"), py::arg("u"), py::arg("ts"), tol, "points exp(t g(supp a, u)) a");
  m.def("geodesic_residual",
        [](const Matrix& a, const Matrix& u, double s, double step, const jg::Tolerance& t) {
          return jg::geodesic_residual(jg::make_geodesic(a, u, t), s, step, t);
        },
        py::arg("a"), py::arg("u"), py::arg("t"), py::arg("step") = 1e-4, tol);
  m.def("riemann_metric",
        [](const Matrix& a, const Matrix& u, const Matrix& v, const jg::Tolerance& t) {
          return jg::riemann_metric(a, u, v, t).hermitian;
        },
        py::arg("a"), py::arg("u"), py::arg("v"), tol, "hermitian form trace(v* u)");
  m.def("symmetry_at", &jg::symmetry_at, py::arg("a"), py::arg("z"), tol);

  // rectangular JB*-triples
  m.def("jb_spectral",
        [](const Matrix& a, const jg::Tolerance& t) {
          const auto r = jg::jb_spectral(a, t);
          py::dict d;
          d["values"] = r.values;
          d["ranks"] = r.ranks;
          d["tripotents"] = r.tripotents;
          return d;
        },
        py::arg("a"), tol);
  m.def("connect_type1", &jg::connect_type1, py::arg("a"), py::arg("b"), tol,
        "unitaries (U, V) with V a U = b");
  m.def("neher_equivalent", &jg::neher_equivalent, py::arg("e"), py::arg("f"), tol);
  m.def("equivalent_elements", &jg::equivalent_elements, py::arg("a"), py::arg("b"), tol);
  m.def("fiber_point", [](const Matrix& a, const Matrix& v, double s, const jg::Tolerance& t) {
    return jg::fiber_sample(a, v, s, t).point;
  }, py::arg("a"), py::arg("v"), py::arg("t"), tol);

  // sampling, I/O, suites
  m.def("random_normal_element",
        [](const std::vector<jg::Complex>& values, const std::vector<Eigen::Index>& ranks,
           Eigen::Index dim, std::uint64_t seed) {
          jg::Rng rng(seed);
          return jg::random_normal_element(rng, values, ranks, dim);
        },
        py::arg("values"), py::arg("ranks"), py::arg("dim"), py::arg("seed") = 0);
  m.def("parse_matrix", &jg::parse_matrix);
  m.def("serialize_matrix", &jg::serialize_matrix);
  m.def("run_suite",
        [](const std::string& suite, int dim, std::size_t trials, std::uint64_t seed) {
          jg::SuiteOptions o;
          o.suite = suite;
          o.dim = dim;
          o.trials = trials;
          o.seed = seed;
          std::string text;
          {
            py::gil_scoped_release release;
            text = jg::run_suite(o).json();
          }
          return json_to_py(text);
        },
        py::arg("suite") = "all", py::arg("dim") = 3, py::arg("trials") = 100,
        py::arg("seed") = 0, "report as a dict");
}
