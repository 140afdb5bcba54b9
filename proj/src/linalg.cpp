#include "jordangeo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace jordangeo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::NotSquare: return "not square";
    case ErrorKind::NotNormal: return "not normal";
    case ErrorKind::ShapeMismatch: return "shape mismatch";
    case ErrorKind::ConjugateLinearInput: return "conjugate-linear input";
    case ErrorKind::NonFinite: return "non-finite entries";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::NotTripotent: return "not a tripotent";
    case ErrorKind::NotOrthogonalFamily: return "not an orthogonal family";
    case ErrorKind::NotInPeirceOne: return "not in Peirce 1-space";
    case ErrorKind::ZeroElement: return "zero element";
    case ErrorKind::SingularVandermonde: return "singular Vandermonde system";
    case ErrorKind::SpectrumMismatch: return "spectrum mismatch";
    case ErrorKind::DifferentComponents: return "different components";
    case ErrorKind::NotTangent: return "not tangent";
    case ErrorKind::NotInA: return "not in A(e)";
  }
  return "unknown error";
}

void Tolerance::validate() const {
  for (double v : {abs, rel, fd_step}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorKind::InvalidArgument,
                  "tolerances must be finite and nonnegative");
    }
  }
}

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

double frobenius_norm(const Matrix& m) { return m.norm(); }

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Eigen::Index numerical_rank(const Matrix& m, double threshold) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  return static_cast<Eigen::Index>((s.array() > threshold).count());
}

bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

void require_finite(const Matrix& m, std::string_view what) {
  if (!all_finite(m)) {
    throw Error(ErrorKind::NonFinite,
                std::string(what) + ": matrix has non-finite entries");
  }
}

void require_square(const Matrix& m, std::string_view what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::NotSquare,
                std::string(what) + ": expected a square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_shape(const Matrix& a, const Matrix& b,
                        std::string_view what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch,
                std::string(what) + ": shapes " + std::to_string(a.rows()) +
                    "x" + std::to_string(a.cols()) + " and " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                    " differ");
  }
}

double normality_residual(const Matrix& a) {
  return (a * a.adjoint() - a.adjoint() * a).norm();
}

namespace {

// Make the largest-magnitude entry of each column real and positive.
void fix_column_phases(Matrix& q) {
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    Eigen::Index best = 0;
    q.col(j).cwiseAbs().maxCoeff(&best);
    const Complex pivot = q(best, j);
    if (std::abs(pivot) > 0.0) q.col(j) *= std::conj(pivot) / std::abs(pivot);
  }
}

}  // namespace

Matrix orthonormal_range(const Matrix& m, double threshold) {
  if (m.size() == 0) return Matrix(m.rows(), 0);
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  // Eigen's own threshold is relative to the largest pivot, which would give
  // a roundoff-level matrix full rank; the cutoff here is absolute below 1.
  const auto pivots = qr.matrixR().diagonal().cwiseAbs();
  const double cutoff = threshold * std::max(1.0, pivots.size() ? pivots(0) : 0.0);
  Eigen::Index r = 0;
  while (r < pivots.size() && pivots(r) > cutoff) ++r;
  Matrix q = Matrix(qr.householderQ()).leftCols(r);
  fix_column_phases(q);
  return q;
}

Matrix orthonormal_complement(const Matrix& basis) {
  const Eigen::Index n = basis.rows();
  if (basis.cols() == 0) return identity(n);
  if (basis.cols() >= n) return Matrix(n, 0);
  const Matrix projector = identity(n) - basis * basis.adjoint();
  Matrix comp = orthonormal_range(projector, 1e-8);
  return comp;
}

bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::vector<EigenPair> eig_normal(const Matrix& a, const Tolerance& tol) {
  require_square(a, "eig_normal");
  require_finite(a, "eig_normal");
  const double scale = std::max(1.0, a.squaredNorm());
  if (normality_residual(a) > tol.abs * scale) {
    throw Error(ErrorKind::NotNormal, "eig_normal: matrix is not normal");
  }
  const Eigen::Index n = a.rows();
  if (n == 0) return {};

  // Schur vectors of a normal matrix are orthonormal eigenvectors.
  Eigen::ComplexSchur<Matrix> schur(a);
  const Matrix& q = schur.matrixU();
  const Matrix& t = schur.matrixT();

  // Single-linkage clustering of the diagonal of T.
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Eigen::Index i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(t(i, i) - t(j, j)) <= tol.cluster()) {
        parent[find(j)] = find(i);
      }
    }
  }

  std::vector<EigenPair> pairs;
  std::vector<Eigen::Index> root_of_pair;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index root = find(i);
    auto it = std::find(root_of_pair.begin(), root_of_pair.end(), root);
    if (it != root_of_pair.end()) continue;
    root_of_pair.push_back(root);
    Complex sum = 0.0;
    int count = 0;
    Matrix projector = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (find(j) != root) continue;
      sum += t(j, j);
      ++count;
      projector += q.col(j) * q.col(j).adjoint();
    }
    pairs.push_back({sum / static_cast<double>(count), projector});
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return complex_less(x.value, y.value);
  });
  return pairs;
}

Matrix mat_exp(const Matrix& x) {
  require_square(x, "mat_exp");
  if (x.isZero(0.0)) return identity(x.rows());
  return x.exp();
}

}  // namespace jordangeo
