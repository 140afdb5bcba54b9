#include "jordangeo/triple.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "jordangeo/linalg.hpp"
#include "jordangeo/random.hpp"

namespace jordangeo {

namespace {

// K vec(X) = vec(X^T) for X of the given shape.
Matrix commutation_matrix(Shape s) {
  Matrix k = Matrix::Zero(s.size(), s.size());
  for (Eigen::Index j = 0; j < s.cols; ++j) {
    for (Eigen::Index i = 0; i < s.rows; ++i) {
      k(j + i * s.cols, i + j * s.rows) = 1.0;
    }
  }
  return k;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

}  // namespace

Tripotent::Tripotent(Matrix e, const Tolerance& tol) : matrix_(std::move(e)) {
  require_finite(matrix_, "Tripotent");
  if (!is_tripotent(matrix_, tol)) {
    throw Error(ErrorKind::NotTripotent, "matrix is not a tripotent");
  }
  // Singular values of a partial isometry are 0 or 1.
  rank_ = numerical_rank(matrix_, 0.5);
}

Matrix triple_product(const Matrix& a, const Matrix& b, const Matrix& c) {
  require_same_shape(a, b, "triple_product");
  require_same_shape(a, c, "triple_product");
  const Matrix first = (a * b.adjoint()) * c;
  const Matrix second = (c * b.adjoint()) * a;
  return (first + second) / 2.0;
}

SuperOperator box(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "box");
  const Shape s = shape_of(a);
  const Matrix left = a * b.adjoint();   // acts from the left on z
  const Matrix right = b.adjoint() * a;  // acts from the right on z
  Matrix kernel = (kron(identity(s.cols), left) +
                   kron(right.transpose(), identity(s.rows))) /
                  2.0;
  return {s, s, std::move(kernel)};
}

SuperOperator quad(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "quad");
  const Shape s = shape_of(a);
  // {a z b} = (a z* b + b z* a)/2 and vec(z*) = K vec(conj z).
  Matrix kernel =
      ((kron(b.transpose(), a) + kron(a.transpose(), b)) / 2.0) *
      commutation_matrix(s);
  return {s, s, std::move(kernel), Linearity::conjugate_linear};
}

bool is_tripotent(const Matrix& e, const Tolerance& tol) {
  if (!all_finite(e)) return false;
  const double residual = (triple_product(e, e, e) - e).norm();
  return tol.accepts(residual, e.norm());
}

bool are_orthogonal(const Matrix& x, const Matrix& y, const Tolerance& tol) {
  return box(x, y).kernel().norm() <= tol.abs;
}

Derivation inner_derivation(const Matrix& e, const Matrix& u) {
  require_same_shape(e, u, "inner_derivation");
  return {box(e, u) - box(u, e), e, u};
}

std::vector<Matrix> sample_matrices(Shape shape, std::size_t count,
                                    std::uint64_t seed) {
  Rng rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(shape.size()));
  std::vector<Matrix> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(rng.gaussian(shape.rows, shape.cols) * scale);
  }
  return out;
}

Check is_triple_derivation(const SuperOperator& delta,
                           const std::vector<Matrix>& samples,
                           const Tolerance& tol) {
  Check out;
  const double op_scale = 1.0 + delta.kernel().norm();
  for (const Matrix& z : samples) {
    const Matrix dz = delta.apply(z);
    const Matrix lhs = delta.apply(triple_product(z, z, z));
    const Matrix rhs = triple_product(dz, z, z) + triple_product(z, dz, z) +
                       triple_product(z, z, dz);
    const double r = (lhs - rhs).norm();
    out.residual = std::max(out.residual, r);
    if (!tol.accepts(r, std::pow(z.norm(), 3) * op_scale)) out.pass = false;
  }
  return out;
}

Check is_cstar_derivation(const SuperOperator& delta,
                          const std::vector<Matrix>& samples,
                          const Tolerance& tol) {
  Check out;
  const double op_scale = 1.0 + delta.kernel().norm();
  auto probe = [&](const Matrix& x, const Matrix& y) {
    require_square(x, "is_cstar_derivation");
    const Matrix r =
        delta.apply(x * y) - delta.apply(x) * y - x * delta.apply(y);
    const double rn = r.norm();
    out.residual = std::max(out.residual, rn);
    if (!tol.accepts(rn, x.norm() * y.norm() * op_scale)) out.pass = false;
  };
  for (std::size_t i = 0; i < samples.size(); ++i) {
    probe(samples[i], samples[i]);
    if (i + 1 < samples.size()) probe(samples[i], samples[i + 1]);
  }
  return out;
}

SuperOperator triple_exp(const Derivation& delta, double t) {
  return super_exp(delta.op * Complex(t));
}

Check is_triple_automorphism(const SuperOperator& phi,
                             const std::vector<Matrix>& samples,
                             const Tolerance& tol) {
  if (phi.dim_in() != phi.dim_out()) {
    throw Error(ErrorKind::ShapeMismatch,
                "is_triple_automorphism: operator is not an endomorphism");
  }
  Eigen::JacobiSVD<Matrix> svd(phi.kernel());
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(s.size() - 1) <= tol.abs) {
    throw Error(ErrorKind::Singular, "is_triple_automorphism: map is singular");
  }
  Check out;
  for (const Matrix& z : samples) {
    const Matrix pz = phi.apply(z);
    const double mult =
        (phi.apply(triple_product(z, z, z)) - triple_product(pz, pz, pz)).norm();
    const double zn = operator_norm(z);
    const double iso = std::abs(operator_norm(pz) - zn);
    out.residual = std::max({out.residual, mult, iso});
    if (!tol.accepts(mult, std::pow(z.norm(), 3)) || !tol.accepts(iso, zn)) {
      out.pass = false;
    }
  }
  return out;
}

bool AxiomReport::pass(const Tolerance& tol) const {
  return linearity <= tol.abs && commutator <= tol.abs &&
         hermitian <= tol.abs && min_spectrum >= -tol.abs &&
         norm_identity <= tol.abs;
}

AxiomReport check_jb_axioms(const Matrix& a, const Matrix& b, const Matrix& c,
                            const Matrix& d) {
  require_same_shape(a, b, "check_jb_axioms");
  require_same_shape(a, c, "check_jb_axioms");
  require_same_shape(a, d, "check_jb_axioms");
  AxiomReport report;
  const Complex alpha{0.3, -1.7};
  const Matrix abc = triple_product(a, b, c);

  // Axiom 1: outer symmetry, linear in the outer slots, conjugate-linear in
  // the middle one.
  report.linearity = std::max(
      {(abc - triple_product(c, b, a)).norm(),
       (triple_product(alpha * a + d, b, c) - alpha * abc -
        triple_product(d, b, c))
           .norm(),
       (triple_product(a, alpha * b + d, c) - std::conj(alpha) * abc -
        triple_product(a, d, c))
           .norm(),
       (triple_product(a, b, alpha * c + d) - alpha * abc -
        triple_product(a, b, d))
           .norm()});

  // Axiom 2.
  const SuperOperator lhs = commutator(box(a, b), box(c, d));
  const SuperOperator rhs = box(abc, d) - box(c, triple_product(d, a, b));
  report.commutator = (lhs.kernel() - rhs.kernel()).norm();

  // Axiom 3.
  const Matrix k = box(a, a).kernel();
  report.hermitian = (k - k.adjoint()).norm();
  const Matrix herm = (k + k.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm, Eigen::EigenvaluesOnly);
  report.min_spectrum = eig.eigenvalues().minCoeff();

  // Axiom 4.
  const double an = operator_norm(a);
  if (an > 0.0) {
    const double cube = an * an * an;
    report.norm_identity =
        std::abs(operator_norm(triple_product(a, a, a)) - cube) / cube;
  }
  return report;
}

}  // namespace jordangeo
