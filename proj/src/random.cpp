#include "jordangeo/random.hpp"

#include <cmath>
#include <numbers>

#include "jordangeo/linalg.hpp"

namespace jordangeo {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
}

Matrix Rng::gaussian(Eigen::Index rows, Eigen::Index cols) {
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
  }
  return m;
}

Matrix Rng::haar_unitary(Eigen::Index n) {
  const Matrix g = gaussian(n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix Rng::hermitian(Eigen::Index n) {
  const Matrix g = gaussian(n, n);
  return (g + g.adjoint()) / 2.0;
}

namespace {

Eigen::Index total_rank(const std::vector<Eigen::Index>& ranks) {
  Eigen::Index sum = 0;
  for (auto r : ranks) {
    if (r <= 0) throw Error(ErrorKind::InvalidArgument, "ranks must be positive");
    sum += r;
  }
  return sum;
}

}  // namespace

Matrix random_normal_element(Rng& rng, const std::vector<Complex>& values,
                             const std::vector<Eigen::Index>& ranks,
                             Eigen::Index dim) {
  if (values.size() != ranks.size()) {
    throw Error(ErrorKind::InvalidArgument, "values and ranks differ in length");
  }
  if (total_rank(ranks) > dim) {
    throw Error(ErrorKind::InvalidArgument, "total rank exceeds dimension");
  }
  Vector diag = Vector::Zero(dim);
  Eigen::Index slot = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    for (Eigen::Index i = 0; i < ranks[k]; ++i) diag(slot++) = values[k];
  }
  const Matrix u = rng.haar_unitary(dim);
  return u * diag.asDiagonal() * u.adjoint();
}

Matrix random_jb_element(Rng& rng, const std::vector<double>& values,
                         const std::vector<Eigen::Index>& ranks,
                         Eigen::Index rows, Eigen::Index cols) {
  if (values.size() != ranks.size()) {
    throw Error(ErrorKind::InvalidArgument, "values and ranks differ in length");
  }
  if (total_rank(ranks) > std::min(rows, cols)) {
    throw Error(ErrorKind::InvalidArgument, "total rank exceeds min(rows, cols)");
  }
  Matrix d = Matrix::Zero(rows, cols);
  Eigen::Index slot = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    for (Eigen::Index i = 0; i < ranks[k]; ++i, ++slot) d(slot, slot) = values[k];
  }
  return rng.haar_unitary(rows) * d * rng.haar_unitary(cols);
}

Matrix random_tripotent(Rng& rng, Eigen::Index rows, Eigen::Index cols,
                        Eigen::Index rank) {
  return random_jb_element(rng, {1.0}, {rank}, rows, cols);
}

}  // namespace jordangeo
