#pragma once

#include <vector>

#include "jordangeo/types.hpp"

namespace jordangeo {

struct EigenPair {
  Complex value;
  Matrix projector;
};

// ---------------------------------------------------------------------------
// Small matrix helpers
// ---------------------------------------------------------------------------

Matrix identity(Eigen::Index n);
double frobenius_norm(const Matrix& m);
/// Largest singular value.
double operator_norm(const Matrix& m);
/// Count of singular values strictly above `threshold`.
Eigen::Index numerical_rank(const Matrix& m, double threshold);
bool all_finite(const Matrix& m);
void require_finite(const Matrix& m, std::string_view what);
void require_square(const Matrix& m, std::string_view what);
void require_same_shape(const Matrix& a, const Matrix& b, std::string_view what);

/// ||a a* - a* a||_F.
double normality_residual(const Matrix& a);

/// Orthonormal basis (as columns) of the column space of `m`, from a
/// column-pivoted Householder QR keeping pivots above
/// threshold * max(1, largest pivot). Each column is
/// phase-normalized so that its largest-magnitude entry is real positive.
Matrix orthonormal_range(const Matrix& m, double threshold = 1e-8);

/// Orthonormal basis of the orthogonal complement of the column span of
/// `basis` (which must itself have orthonormal columns).
Matrix orthonormal_complement(const Matrix& basis);

// ---------------------------------------------------------------------------
// Spectral and exponential routines
// ---------------------------------------------------------------------------

/// Spectral decomposition of a normal matrix: distinct eigenvalues with their
/// orthogonal spectral projectors, sorted by (Re, Im).
///
/// Eigenvalues within tol.cluster() of each other are merged into a single
/// value (their mean) with the summed projector. Throws NotSquare, NotNormal
/// (when ||aa* - a*a|| exceeds tol.bound(||a||^2)).
std::vector<EigenPair> eig_normal(const Matrix& a, const Tolerance& tol = {});

/// Matrix exponential by scaling and squaring with a Padé approximant.
/// exp(0) is the identity exactly.
Matrix mat_exp(const Matrix& x);

/// Lexicographic (Re, Im) order used for every canonical value ordering.
bool complex_less(const Complex& a, const Complex& b);

}  // namespace jordangeo
