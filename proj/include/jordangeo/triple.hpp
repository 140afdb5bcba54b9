#pragma once

#include <cstdint>
#include <vector>

#include "jordangeo/superop.hpp"
#include "jordangeo/types.hpp"

namespace jordangeo {

/// A partial isometry e with {e e e} = e.
class Tripotent {
 public:
  /// Validates {eee} = e within tol. Throws NotTripotent.
  explicit Tripotent(Matrix e, const Tolerance& tol = {});

  const Matrix& matrix() const { return matrix_; }
  Eigen::Index rank() const { return rank_; }
  /// Rank one (hence norm one) tripotent.
  bool minimal() const { return rank_ == 1; }
  Shape shape() const { return shape_of(matrix_); }

 private:
  Matrix matrix_;
  Eigen::Index rank_ = 0;
};

/// Inner derivation g(base, direction) = base□direction - direction□base.
struct Derivation {
  SuperOperator op;
  Matrix base;
  Matrix direction;
};

/// {a b c} = (a b* c + c b* a) / 2.
///
/// Exactly symmetric in (a, c): both orders evaluate the same two products.
Matrix triple_product(const Matrix& a, const Matrix& b, const Matrix& c);

/// a□b : z -> {a b z}.
SuperOperator box(const Matrix& a, const Matrix& b);

/// Q(a, b) : z -> {a z b}, conjugate-linear.
SuperOperator quad(const Matrix& a, const Matrix& b);

bool is_tripotent(const Matrix& e, const Tolerance& tol = {});

/// x and y are orthogonal when the kernel of x□y vanishes (Frobenius norm).
bool are_orthogonal(const Matrix& x, const Matrix& y, const Tolerance& tol = {});

Derivation inner_derivation(const Matrix& e, const Matrix& u);

/// Seeded Gaussian samples in M_{rows x cols}, entries scaled by
/// 1/sqrt(rows*cols) so each sample has Frobenius norm close to one.
std::vector<Matrix> sample_matrices(Shape shape, std::size_t count,
                                    std::uint64_t seed);

/// δ{zzz} = {δz z z} + {z δz z} + {z z δz} on every sample.
Check is_triple_derivation(const SuperOperator& delta,
                           const std::vector<Matrix>& samples,
                           const Tolerance& tol = {});

/// Leibniz rule δ(xy) = δ(x)y + xδ(y) on consecutive sample pairs (and each
/// sample paired with itself). Square matrices only.
Check is_cstar_derivation(const SuperOperator& delta,
                          const std::vector<Matrix>& samples,
                          const Tolerance& tol = {});

/// exp(t δ).
SuperOperator triple_exp(const Derivation& delta, double t);

/// φ{zzz} = {φz φz φz} and ||φz|| = ||z|| (operator norm) on the samples.
/// Throws Singular when the kernel is not invertible within tol.
Check is_triple_automorphism(const SuperOperator& phi,
                             const std::vector<Matrix>& samples,
                             const Tolerance& tol = {});

struct AxiomReport {
  /// Symmetry in the outer arguments plus complex/conjugate linearity.
  double linearity = 0.0;
  /// ||[a□b, c□d] - ({abc}□d - c□{dab})|| on kernels.
  double commutator = 0.0;
  /// ||K - K*|| for the kernel K of a□a.
  double hermitian = 0.0;
  /// Smallest eigenvalue of the hermitian part of the a□a kernel.
  double min_spectrum = 0.0;
  /// | ||{aaa}|| - ||a||^3 | / ||a||^3 in operator norm (0 for a = 0).
  double norm_identity = 0.0;

  bool pass(const Tolerance& tol) const;
};

AxiomReport check_jb_axioms(const Matrix& a, const Matrix& b, const Matrix& c,
                            const Matrix& d);

}  // namespace jordangeo
