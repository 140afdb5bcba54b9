#include "jordangeo/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "jordangeo/linalg.hpp"
#include "jordangeo/peirce.hpp"

namespace jordangeo {

namespace {

SpectralResolution nonzero_resolution(const Matrix& a, const Tolerance& tol) {
  SpectralResolution res = spectral_resolution(a, tol);
  if (res.values.empty()) {
    throw Error(ErrorKind::ZeroElement, "the zero element is not a manifold point");
  }
  return res;
}

Matrix support_of(const SpectralResolution& res, const Matrix& a) {
  Matrix s = Matrix::Zero(a.rows(), a.cols());
  for (const auto& e : res.projections) s += e;
  return s;
}

Complex inner(const Matrix& u, const Matrix& v) {
  return (v.adjoint() * u).trace();
}

TangentDecomposition decompose(const SpectralResolution& res, const Matrix& a,
                               const Matrix& u, const Tolerance& tol) {
  require_same_shape(a, u, "is_tangent");
  const Matrix s = support_of(res, a);
  TangentDecomposition out;
  out.residual = (2.0 * triple_product(s, s, u) - u).norm();
  out.tangent = out.residual <= tol.abs * std::max(1.0, u.norm());
  for (const auto& e : res.projections) out.components.push_back(e * u + u * e);
  for (std::size_t j = 0; j < res.size(); ++j) {
    for (std::size_t k = 0; k < res.size(); ++k) {
      if (j == k) continue;
      const Matrix& ej = res.projections[j];
      const Matrix& uk = out.components[k];
      out.orthogonality =
          std::max({out.orthogonality, (ej * uk).norm(), (uk * ej).norm()});
    }
  }
  return out;
}

Matrix restricted_inverse(const SpectralResolution& res,
                          const TangentDecomposition& dec) {
  Matrix x = Matrix::Zero(dec.components.front().rows(),
                          dec.components.front().cols());
  for (std::size_t k = 0; k < res.size(); ++k) {
    x += (-2.0 / res.values[k]) * dec.components[k];
  }
  return x;
}

// Points exp(±h g(s, Φ_a^{-1} X_a)) a on the curve through a with velocity X_a.
std::pair<Matrix, Matrix> flow_points(const Matrix& a, const Matrix& direction,
                                      double h, const Tolerance& tol) {
  const Matrix pre = phi_restricted_inverse(a, direction, tol);
  const Matrix s = support(a, tol).projection;
  const SuperOperator g = inner_derivation(s, pre).op;
  return {super_exp(g * Complex(h)).apply(a),
          super_exp(g * Complex(-h)).apply(a)};
}

}  // namespace

SupportFn cstar_support(const Tolerance& tol) {
  return [tol](const Matrix& b) { return support(b, tol).projection; };
}

Matrix triple_support(const Matrix& b, const Tolerance& tol) {
  Eigen::JacobiSVD<Matrix> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  Eigen::Index r = 0;
  while (r < sigma.size() && sigma(r) > tol.cluster()) ++r;
  return svd.matrixU().leftCols(r) * svd.matrixV().leftCols(r).adjoint();
}

SupportFn triple_support_fn(const Tolerance& tol) {
  return [tol](const Matrix& b) { return triple_support(b, tol); };
}

Matrix half_projection(const Matrix& s, const Matrix& z) {
  return peirce_component(s, z, PeirceSpace::half);
}

std::vector<Matrix> tangent_space_basis(const Matrix& a, const Tolerance& tol) {
  const SpectralResolution res = nonzero_resolution(a, tol);
  const Matrix s = support_of(res, a);
  const SuperOperator q = quad(s, s);
  const SuperOperator p12 = (box(s, s) - q.compose(q)) * Complex(2.0);
  return projection_basis(p12);
}

TangentDecomposition is_tangent(const Matrix& a, const Matrix& u,
                                const Tolerance& tol) {
  return decompose(nonzero_resolution(a, tol), a, u, tol);
}

Matrix phi(const Matrix& a, const Matrix& x, const Tolerance& tol) {
  const Matrix s = support_of(nonzero_resolution(a, tol), a);
  return triple_product(s, x, a) - triple_product(x, s, a);
}

Matrix phi_closed_form(const SpectralResolution& res,
                       const std::vector<Matrix>& v_parts, const Matrix& u) {
  Matrix out = Matrix::Zero(u.rows(), u.cols());
  for (std::size_t k = 0; k < res.size(); ++k) {
    const Matrix& e = res.projections[k];
    if (k < v_parts.size()) out += (-2.0 * kI * res.values[k]) * v_parts[k];
    out += (-0.5 * res.values[k]) * (e * u + u * e);
  }
  return out;
}

Matrix phi_restricted_inverse(const Matrix& a, const Matrix& y,
                              const Tolerance& tol) {
  const SpectralResolution res = nonzero_resolution(a, tol);
  const TangentDecomposition dec = decompose(res, a, y, tol);
  if (!dec.tangent) {
    throw Error(ErrorKind::NotTangent,
                "phi_restricted_inverse: argument is not in Z_1/2(supp a)");
  }
  return restricted_inverse(res, dec);
}

double tangent_map_min_singular_value(const Matrix& a, const Tolerance& tol) {
  const std::vector<Matrix> basis = tangent_space_basis(a, tol);
  if (basis.empty()) return 0.0;
  const auto n = static_cast<Eigen::Index>(basis.size());
  Matrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Matrix image = phi(a, basis[static_cast<std::size_t>(j)], tol);
    for (Eigen::Index i = 0; i < n; ++i) {
      m(i, j) = inner(image, basis[static_cast<std::size_t>(i)]);
    }
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(n - 1);
}

Matrix chart(const Matrix& a, const Matrix& u, const Tolerance& tol) {
  const SpectralResolution res = nonzero_resolution(a, tol);
  if (!decompose(res, a, u, tol).tangent) {
    throw Error(ErrorKind::NotTangent, "chart: direction is not tangent at a");
  }
  const Matrix s = support_of(res, a);
  return super_exp(inner_derivation(s, u).op).apply(a);
}

Matrix chart_inverse(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  require_same_shape(a, b, "chart_inverse");
  const SpectralResolution res = nonzero_resolution(a, tol);
  const Matrix s = support_of(res, a);
  double min_value = std::abs(res.values.front());
  for (const Complex& v : res.values) min_value = std::min(min_value, std::abs(v));
  const double radius = 0.5 * min_value;

  auto correction = [&](const Matrix& target_gap) {
    const Matrix y = half_projection(s, target_gap);
    return restricted_inverse(res, decompose(res, a, y, tol));
  };

  Matrix u = correction(b - a);
  double gap = (chart(a, u, tol) - b).norm();
  // Refine to roundoff; the tolerance only decides acceptance below.
  const double target = 1e-14 * std::max(1.0, b.norm());
  for (int iter = 0; iter < 200 && gap > target; ++iter) {
    const Matrix step = correction(b - chart(a, u, tol));
    double damping = 1.0;
    Matrix trial = u + step;
    double trial_gap = (chart(a, trial, tol) - b).norm();
    while (trial_gap > gap && damping > 1e-3) {
      damping /= 2.0;
      trial = u + damping * step;
      trial_gap = (chart(a, trial, tol) - b).norm();
    }
    if (trial_gap >= gap) break;
    u = std::move(trial);
    gap = trial_gap;
  }
  if (u.norm() > radius) {
    throw Error(ErrorKind::InvalidArgument,
                "chart_inverse: point lies outside the chart radius");
  }
  if (gap > tol.bound(b.norm())) {
    throw Error(ErrorKind::InvalidArgument,
                "chart_inverse: fixed-point refinement did not converge");
  }
  return u;
}

Geodesic make_geodesic(const Matrix& a, const Matrix& u, const Tolerance& tol) {
  const SpectralResolution res = nonzero_resolution(a, tol);
  if (!decompose(res, a, u, tol).tangent) {
    throw Error(ErrorKind::NotTangent,
                "make_geodesic: direction is not tangent at a");
  }
  const Matrix s = support_of(res, a);
  return {a, u, inner_derivation(s, u)};
}

Matrix geodesic_point(const Geodesic& g, double t) {
  if (t == 0.0) return g.base;
  return super_exp(g.derivation.op * Complex(t)).apply(g.base);
}

double curve_residual(const std::function<Matrix(double)>& curve, double t,
                      double step, const SupportFn& support_of_point) {
  const Matrix c0 = curve(t);
  const Matrix acc = (curve(t + step) - 2.0 * c0 + curve(t - step)) / (step * step);
  return half_projection(support_of_point(c0), acc).norm();
}

double geodesic_residual(const Geodesic& g, double t, double step,
                         const Tolerance& tol) {
  return curve_residual([&g](double tau) { return geodesic_point(g, tau); }, t,
                        step, triple_support_fn(tol));
}

Matrix field_derivative(const VectorField& x, const VectorField& y,
                        const Matrix& a, const Tolerance& tol) {
  const double h = y.fd_step;
  const auto [forward, backward] = flow_points(a, x(a), h, tol);
  return (y(forward) - y(backward)) / (2.0 * h);
}

Matrix connection(const VectorField& x, const VectorField& y, const Matrix& a,
                  const Tolerance& tol) {
  const Matrix s = support_of(nonzero_resolution(a, tol), a);
  return half_projection(s, field_derivative(x, y, a, tol));
}

Matrix lie_bracket(const VectorField& x, const VectorField& y, const Matrix& a,
                   const Tolerance& tol) {
  return field_derivative(x, y, a, tol) - field_derivative(y, x, a, tol);
}

double torsion_residual(const VectorField& x, const VectorField& y,
                        const Matrix& a, const Tolerance& tol) {
  const Matrix s = support_of(nonzero_resolution(a, tol), a);
  const Matrix dy = field_derivative(x, y, a, tol);
  const Matrix dx = field_derivative(y, x, a, tol);
  const Matrix t = half_projection(s, dy) - half_projection(s, dx) - (dy - dx);
  return t.norm();
}

MetricValue riemann_metric(const Matrix& a, const Matrix& u, const Matrix& v,
                           const Tolerance& tol) {
  const SpectralResolution res = nonzero_resolution(a, tol);
  if (!decompose(res, a, u, tol).tangent || !decompose(res, a, v, tol).tangent) {
    throw Error(ErrorKind::NotTangent, "riemann_metric: arguments must be tangent");
  }
  const Complex h = inner(u, v);
  return {h, h.real()};
}

double check_metric_compatibility(const VectorField& x, const VectorField& y,
                                  const VectorField& w, const Matrix& a,
                                  const Tolerance& tol) {
  const double h = x.fd_step;
  const auto [forward, backward] = flow_points(a, x(a), h, tol);
  const Complex lhs =
      (inner(y(forward), w(forward)) - inner(y(backward), w(backward))) / (2.0 * h);
  const Complex rhs =
      inner(connection(x, y, a, tol), w(a)) + inner(y(a), connection(x, w, a, tol));
  return std::abs(lhs - rhs);
}

double check_hermitian_connection(const VectorField& x, const VectorField& y,
                                  const Matrix& a, const Tolerance& tol) {
  return (connection(x, times_i(y), a, tol) - kI * connection(x, y, a, tol)).norm();
}

Matrix symmetry_at(const Matrix& a, const Matrix& z, const Tolerance& tol) {
  require_same_shape(a, z, "symmetry_at");
  const Matrix s = support_of(nonzero_resolution(a, tol), a);
  return z - 2.0 * half_projection(s, z);
}

VectorField polynomial_field(std::vector<Matrix> coefficients,
                             const Tolerance& tol, bool selfadjoint) {
  if (coefficients.size() != 5) {
    throw Error(ErrorKind::InvalidArgument,
                "polynomial_field: expected five coefficient matrices");
  }
  VectorField field;
  field.fd_step = tol.fd_step;
  field.evaluate = [c = std::move(coefficients), tol, selfadjoint](const Matrix& b) {
    Matrix p = c[0] + c[1] * b + b * c[2] + c[3] * b.adjoint() + b * c[4] * b;
    if (selfadjoint) p = (p + p.adjoint()).eval() / 2.0;
    return half_projection(triple_support(b, tol), p);
  };
  return field;
}

VectorField times_i(const VectorField& y) {
  VectorField out;
  out.fd_step = y.fd_step;
  out.evaluate = [y](const Matrix& b) -> Matrix { return kI * y(b); };
  return out;
}

}  // namespace jordangeo
