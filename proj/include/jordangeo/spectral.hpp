#pragma once

#include <string>
#include <vector>

#include "jordangeo/types.hpp"

namespace jordangeo {

/// a = sum_k λ_k e_k over the nonzero spectral values; the zero summand is
/// dropped and only its dimension is kept.
struct SpectralResolution {
  std::vector<Complex> values;
  std::vector<Matrix> projections;
  std::vector<Eigen::Index> ranks;
  Eigen::Index kernel_rank = 0;

  std::size_t size() const { return values.size(); }
  Matrix reconstruct() const;
};

/// The invariant (n, Λ, R) labelling a component M(n, Λ, R) or N(n, Λ, R).
/// Values are kept in (Re, Im) lexicographic order.
struct ComponentSignature {
  std::vector<Complex> values;
  std::vector<Eigen::Index> ranks;

  std::size_t n() const { return values.size(); }
  /// Multiset equality of (λ, r) pairs with values compared within `value_tol`.
  bool matches(const ComponentSignature& other, double value_tol) const;
  std::string to_string() const;
};

struct Support {
  Matrix projection;
  Eigen::Index rank = 0;
};

bool is_normal(const Matrix& a, const Tolerance& tol = {});

/// Roots of the minimal polynomial of a normal matrix (its distinct
/// eigenvalues, zero included when singular). Throws NotNormal.
std::vector<Complex> minimal_polynomial(const Matrix& a, const Tolerance& tol = {});

/// prod_k (a - μ_k I).
Matrix evaluate_polynomial(const std::vector<Complex>& roots, const Matrix& a);

/// Throws NotSquare, NotNormal.
SpectralResolution spectral_resolution(const Matrix& a, const Tolerance& tol = {});

/// supp a = sum of the spectral projections of the nonzero spectral values.
/// For a = 0 this is the zero projection with rank 0.
Support support(const Matrix& a, const Tolerance& tol = {});

/// Throws ZeroElement for a = 0.
ComponentSignature signature(const Matrix& a, const Tolerance& tol = {});
ComponentSignature signature_of(const SpectralResolution& res);

/// Solves a^l = sum_k λ_k^l e_k, l = 1..n, for the e_k.
/// Throws SingularVandermonde, SpectrumMismatch.
std::vector<Matrix> vandermonde_projections(const Matrix& a,
                                            const std::vector<Complex>& values,
                                            const Tolerance& tol = {});

bool same_component(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

/// Unitary U with U a U* = b, assembled from orthonormal bases of matching
/// spectral subspaces (kernels included). Throws DifferentComponents.
Matrix unitary_connect(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

/// a*, which lies in M(n, conj Λ, R).
Matrix involution_image(const Matrix& a);

}  // namespace jordangeo
