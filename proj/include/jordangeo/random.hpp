#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jordangeo/types.hpp"

namespace jordangeo {

/// Seeded random source: std::mt19937_64 driving a Box-Muller normal
/// transform, so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi);  // inclusive
  double normal();
  Complex complex_normal();

  /// Entries i.i.d. standard complex normal.
  Matrix gaussian(Eigen::Index rows, Eigen::Index cols);
  /// Haar unitary: QR of a Gaussian matrix with the R-diagonal phases removed.
  Matrix haar_unitary(Eigen::Index n);
  /// Random hermitian matrix with unit-scale entries.
  Matrix hermitian(Eigen::Index n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// a = U diag(λ_1 I_{r_1}, ..., λ_n I_{r_n}, 0) U* for a Haar unitary U.
Matrix random_normal_element(Rng& rng, const std::vector<Complex>& values,
                             const std::vector<Eigen::Index>& ranks,
                             Eigen::Index dim);

/// a = V D W with D carrying λ_k on r_k diagonal slots, V and W Haar.
Matrix random_jb_element(Rng& rng, const std::vector<double>& values,
                         const std::vector<Eigen::Index>& ranks,
                         Eigen::Index rows, Eigen::Index cols);

/// Random partial isometry of the given rank.
Matrix random_tripotent(Rng& rng, Eigen::Index rows, Eigen::Index cols,
                        Eigen::Index rank);

}  // namespace jordangeo
