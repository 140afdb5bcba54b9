#include "jordangeo/jbtriple.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jordangeo/linalg.hpp"
#include "jordangeo/peirce.hpp"
#include "jordangeo/triple.hpp"

namespace jordangeo {

namespace {

Matrix hconcat(const std::vector<Matrix>& blocks, Eigen::Index rows) {
  Eigen::Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

Matrix with_complement(const Matrix& basis) {
  Matrix out(basis.rows(), basis.rows());
  const Matrix rest = orthonormal_complement(basis);
  out << basis, rest;
  return out;
}

// Real basis of the r x r hermitian matrices, orthonormal for Re tr(y* x).
std::vector<Matrix> hermitian_basis(Eigen::Index r) {
  std::vector<Matrix> out;
  const double w = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < r; ++i) {
    Matrix d = Matrix::Zero(r, r);
    d(i, i) = 1.0;
    out.push_back(d);
    for (Eigen::Index j = i + 1; j < r; ++j) {
      Matrix sym = Matrix::Zero(r, r);
      sym(i, j) = sym(j, i) = w;
      out.push_back(sym);
      Matrix skew = Matrix::Zero(r, r);
      skew(i, j) = Complex(0.0, w);
      skew(j, i) = Complex(0.0, -w);
      out.push_back(skew);
    }
  }
  return out;
}

ComponentSignature signature_from(const TripotentResolution& r) {
  ComponentSignature sig;
  for (std::size_t k = 0; k < r.size(); ++k) {
    sig.values.emplace_back(r.values[k], 0.0);
    sig.ranks.push_back(r.ranks[k]);
  }
  return sig;
}

void require_same_component(const TripotentResolution& ra,
                            const TripotentResolution& rb, const Tolerance& tol,
                            const char* what) {
  if (!signature_from(ra).matches(signature_from(rb), tol.cluster())) {
    throw Error(ErrorKind::DifferentComponents,
                std::string(what) + ": elements lie in different components");
  }
}

bool half_member(const Matrix& s, const Matrix& u, const Tolerance& tol) {
  return (2.0 * triple_product(s, s, u) - u).norm() <=
         tol.abs * std::max(1.0, u.norm());
}

}  // namespace

Matrix TripotentResolution::reconstruct() const {
  if (tripotents.empty()) return {};
  Matrix out = Matrix::Zero(tripotents.front().rows(), tripotents.front().cols());
  for (std::size_t k = 0; k < size(); ++k) out += values[k] * tripotents[k];
  return out;
}

Matrix TripotentResolution::support() const {
  if (tripotents.empty()) return {};
  Matrix out = Matrix::Zero(tripotents.front().rows(), tripotents.front().cols());
  for (const auto& e : tripotents) out += e;
  return out;
}

TripotentResolution jb_spectral(const Matrix& a, const Tolerance& tol) {
  require_finite(a, "jb_spectral");
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();  // decreasing
  const Matrix& u = svd.matrixU();
  const Matrix& v = svd.matrixV();
  const double thr = tol.cluster();

  TripotentResolution res;
  Eigen::Index start = 0;
  const Eigen::Index m = sigma.size();
  while (start < m && sigma(start) > thr) {
    Eigen::Index end = start + 1;
    while (end < m && sigma(end) > thr && sigma(end - 1) - sigma(end) <= thr) ++end;
    const Eigen::Index r = end - start;
    Matrix left = u.middleCols(start, r);
    Matrix right = v.middleCols(start, r);
    res.values.push_back(sigma.segment(start, r).mean());
    res.tripotents.push_back(left * right.adjoint());
    res.ranks.push_back(r);
    res.left.push_back(std::move(left));
    res.right.push_back(std::move(right));
    start = end;
  }
  if (res.values.empty()) {
    throw Error(ErrorKind::ZeroElement, "jb_spectral: element is zero");
  }
  std::reverse(res.values.begin(), res.values.end());
  std::reverse(res.tripotents.begin(), res.tripotents.end());
  std::reverse(res.ranks.begin(), res.ranks.end());
  std::reverse(res.left.begin(), res.left.end());
  std::reverse(res.right.begin(), res.right.end());
  return res;
}

double odd_power_check(const TripotentResolution& r, int l) {
  if (r.size() == 0 || l < 0) {
    throw Error(ErrorKind::InvalidArgument, "odd_power_check: empty resolution or l < 0");
  }
  const Matrix a = r.reconstruct();
  Matrix power = a;
  for (int m = 1; m <= l; ++m) power = triple_product(a, power, a);
  Matrix expected = Matrix::Zero(a.rows(), a.cols());
  for (std::size_t k = 0; k < r.size(); ++k) {
    expected += std::pow(r.values[k], 2 * l + 1) * r.tripotents[k];
  }
  return (power - expected).norm() / std::max(1.0, expected.norm());
}

ComponentSignature jb_signature(const Matrix& a, const Tolerance& tol) {
  return signature_from(jb_spectral(a, tol));
}

std::pair<Matrix, Matrix> connect_type1(const Matrix& a, const Matrix& b,
                                        const Tolerance& tol) {
  require_same_shape(a, b, "connect_type1");
  const TripotentResolution ra = jb_spectral(a, tol);
  const TripotentResolution rb = jb_spectral(b, tol);
  require_same_component(ra, rb, tol, "connect_type1");

  // V left_k(a) = left_k(b) and U* right_k(a) = right_k(b), so V e_k U = f_k.
  const Matrix la = with_complement(hconcat(ra.left, a.rows()));
  const Matrix lb = with_complement(hconcat(rb.left, a.rows()));
  const Matrix qa = with_complement(hconcat(ra.right, a.cols()));
  const Matrix qb = with_complement(hconcat(rb.right, a.cols()));
  return {qa * qb.adjoint(), lb * la.adjoint()};
}

Matrix ExtendedTangent::total() const {
  Matrix out = half_part;
  for (const auto& v : ia_part) out += kI * v;
  return out;
}

std::vector<Matrix> extended_tangent_basis(const Matrix& a, const Tolerance& tol) {
  const TripotentResolution res = jb_spectral(a, tol);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < res.size(); ++k) {
    for (const auto& h : hermitian_basis(res.ranks[k])) {
      out.push_back(kI * (res.left[k] * h * res.right[k].adjoint()));
    }
  }
  const Matrix s = res.support();
  const SuperOperator q = quad(s, s);
  const SuperOperator p12 = (box(s, s) - q.compose(q)) * Complex(2.0);
  for (const auto& b : projection_basis(p12)) {
    out.push_back(b);
    out.push_back(kI * b);
  }
  return out;
}

ExtendedTangentCheck is_extended_tangent(const Matrix& a, const Matrix& z,
                                         const Tolerance& tol) {
  require_same_shape(a, z, "is_extended_tangent");
  const TripotentResolution res = jb_spectral(a, tol);
  const Matrix s = res.support();
  ExtendedTangentCheck out;
  out.decomposition.base = a;
  out.decomposition.half_part = half_projection(s, z);
  for (std::size_t k = 0; k < res.size(); ++k) {
    // P_1(e_k) z = L (L* z R) R*; the iA(e_k) part has L* z R = i H.
    const Matrix x = -kI * (res.left[k].adjoint() * z * res.right[k]);
    const Matrix h = (x + x.adjoint()) / 2.0;
    out.decomposition.ia_part.push_back(res.left[k] * h * res.right[k].adjoint());
  }
  out.residual = (z - out.decomposition.total()).norm();
  out.tangent = out.residual <= tol.abs * std::max(1.0, z.norm());
  return out;
}

Matrix chart_ext(const Matrix& a, const Matrix& z, const Tolerance& tol) {
  if (!is_extended_tangent(a, z, tol).tangent) {
    throw Error(ErrorKind::NotTangent, "chart_ext: direction is not tangent at a");
  }
  const Matrix s = jb_spectral(a, tol).support();
  return super_exp(inner_derivation(s, z).op).apply(a);
}

NeherReport neher_report(const Matrix& e, const Matrix& f, const Tolerance& tol) {
  require_same_shape(e, f, "neher_equivalent");
  const Tripotent te(e, tol);
  const Tripotent tf(f, tol);
  NeherReport out;
  out.box_residual = (box(e, e).kernel() - box(f, f).kernel()).norm();
  out.peirce_residual =
      std::max((peirce_component(f, e, PeirceSpace::one) - e).norm(),
               (peirce_component(e, f, PeirceSpace::one) - f).norm());
  const double bound = tol.abs * std::max({1.0, e.norm(), f.norm()});
  out.box_equivalent = out.box_residual <= bound;
  out.peirce_equivalent = out.peirce_residual <= bound;
  return out;
}

bool neher_equivalent(const Matrix& e, const Matrix& f, const Tolerance& tol) {
  return neher_report(e, f, tol).box_equivalent;
}

bool equivalent_elements(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  require_same_shape(a, b, "equivalent_elements");
  const TripotentResolution ra = jb_spectral(a, tol);
  const TripotentResolution rb = jb_spectral(b, tol);
  require_same_component(ra, rb, tol, "equivalent_elements");
  for (std::size_t k = 0; k < ra.size(); ++k) {
    if (!neher_equivalent(ra.tripotents[k], rb.tripotents[k], tol)) return false;
  }
  return true;
}

FiberSample fiber_sample(const Matrix& a, const Matrix& v, double t,
                         const Tolerance& tol) {
  require_same_shape(a, v, "fiber_sample");
  const TripotentResolution res = jb_spectral(a, tol);
  FiberSample out;

  Matrix assembled = Matrix::Zero(a.rows(), a.cols());
  for (std::size_t k = 0; k < res.size(); ++k) {
    const Tripotent e(res.tripotents[k], tol);
    const Matrix w = peirce_component(e.matrix(), v, PeirceSpace::one);
    auto [h, skew] = selfadjoint_split(e, w, tol);
    assembled += h;
    out.v_parts.push_back(std::move(h));
  }
  if ((v - assembled).norm() > tol.abs * std::max(1.0, v.norm())) {
    throw Error(ErrorKind::NotInA,
                "fiber_sample: direction is not a sum of selfadjoint Peirce-1 parts");
  }

  const Matrix s = res.support();
  out.point = t == 0.0
                  ? a
                  : super_exp(inner_derivation(s, kI * v).op * Complex(t)).apply(a);

  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  for (std::size_t k = 0; k < res.size(); ++k) {
    const Matrix& e = res.tripotents[k];
    const Matrix psi =
        t == 0.0 ? e
                 : super_exp(inner_derivation(e, kI * out.v_parts[k]).op * Complex(t))
                       .apply(e);
    sum += res.values[k] * psi;
    out.membership = std::max(
        out.membership, (peirce_component(e, psi, PeirceSpace::one) - psi).norm());

    // Z_1(e_k) = L X R* is a copy of M_r with x∘y = {x e y} and x# = {e x e}
    // becoming the Jordan product and X*, so the unit circle is U(r).
    const Matrix x = res.left[k].adjoint() * psi * res.right[k];
    Eigen::FullPivLU<Matrix> lu(x);
    if (!lu.isInvertible()) {
      out.unit_circle = std::numeric_limits<double>::infinity();
    } else {
      out.unit_circle = std::max(out.unit_circle, (lu.inverse() - x.adjoint()).norm());
    }
    out.factors.push_back(psi);
  }
  out.factorization = (out.point - sum).norm();
  return out;
}

SupportFn jb_support(const Tolerance& tol) {
  return [tol](const Matrix& b) { return jb_spectral(b, tol).support(); };
}

Geodesic base_geodesic(const Matrix& a, const Matrix& u, const Tolerance& tol) {
  require_same_shape(a, u, "base_geodesic");
  const Matrix s = jb_spectral(a, tol).support();
  if (!half_member(s, u, tol)) {
    throw Error(ErrorKind::NotTangent,
                "base_geodesic: direction is not in Z_1/2(supp a)");
  }
  return {a, u, inner_derivation(s, u)};
}

double base_geodesic_residual(const Geodesic& g, double t, double step,
                              const Tolerance& tol) {
  return curve_residual([&g](double tau) { return geodesic_point(g, tau); }, t,
                        step, jb_support(tol));
}

}  // namespace jordangeo
