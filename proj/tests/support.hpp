#pragma once

// Shared helpers and independent oracles for the unit tests.

#include <cmath>
#include <vector>

#include "jordangeo/random.hpp"
#include "jordangeo/superop.hpp"
#include "jordangeo/types.hpp"

namespace testing {

using jordangeo::Complex;
using jordangeo::Matrix;

inline constexpr double kPi = 3.14159265358979323846;

// Matrix unit E_ij (1-based) in M_{rows x cols}.
inline Matrix E(int i, int j, int rows = 2, int cols = -1) {
  Matrix m = Matrix::Zero(rows, cols < 0 ? rows : cols);
  m(i - 1, j - 1) = 1.0;
  return m;
}

inline Matrix diag(std::vector<Complex> d) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()),
                          static_cast<Eigen::Index>(d.size()));
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

inline Complex kI() { return {0.0, 1.0}; }

inline double dist(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

// exp by scaling and squaring around a plain Taylor series; shares no code
// with the library's Padé routine.
inline Matrix taylor_exp(const Matrix& x) {
  int s = 0;
  double n = x.cwiseAbs().rowwise().sum().maxCoeff();
  while (n > 0.25) {
    n /= 2.0;
    ++s;
  }
  const Matrix y = x / std::pow(2.0, s);
  Matrix term = Matrix::Identity(x.rows(), x.cols());
  Matrix sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * y / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

// Column-stacked kernel of a complex-linear map, built by applying it to the
// matrix units.
template <class F>
Matrix brute_kernel(F f, Eigen::Index rows, Eigen::Index cols) {
  Matrix k(rows * cols, rows * cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      Matrix unit = Matrix::Zero(rows, cols);
      unit(i, j) = 1.0;
      const Matrix img = f(unit);
      k.col(j * rows + i) = Eigen::Map<const jordangeo::Vector>(img.data(), img.size());
    }
  }
  return k;
}

// exp(t g(s, u)) a evaluated two-sidedly: g(s, u) z = (A z + z B) / 2 with
// A = s u* - u s*, B = u* s - s* u.
inline Matrix two_sided_geodesic(const Matrix& s, const Matrix& u, const Matrix& a,
                                 double t) {
  const Matrix A = s * u.adjoint() - u * s.adjoint();
  const Matrix B = u.adjoint() * s - s.adjoint() * u;
  return taylor_exp(0.5 * t * A) * a * taylor_exp(0.5 * t * B);
}

inline Matrix random_hermitian(jordangeo::Rng& rng, Eigen::Index n) {
  const Matrix g = rng.gaussian(n, n);
  return 0.5 * (g + g.adjoint());
}

}  // namespace testing
