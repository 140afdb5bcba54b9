#pragma once

#include <utility>
#include <vector>

#include "jordangeo/manifold.hpp"
#include "jordangeo/spectral.hpp"
#include "jordangeo/types.hpp"

namespace jordangeo {

// Algebraic elements of the type I Cartan factor L(C^cols, C^rows), i.e.
// rectangular matrices with the triple product {abc} = (ab*c + cb*a)/2.

/// a = Σ λ_k e_k with 0 < λ_1 < ... < λ_n and pairwise orthogonal partial
/// isometries e_k = left_k right_k*.
struct TripotentResolution {
  std::vector<double> values;
  std::vector<Matrix> tripotents;
  std::vector<Eigen::Index> ranks;
  /// Orthonormal columns spanning the range and the initial space of e_k.
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  std::size_t size() const { return values.size(); }
  Matrix reconstruct() const;
  /// The support tripotent Σ e_k.
  Matrix support() const;
};

/// SVD grouped by singular value (within tol.cluster()).
/// Throws ZeroElement, NonFinite.
TripotentResolution jb_spectral(const Matrix& a, const Tolerance& tol = {});

/// Relative residual of a^(2l+1) = Σ λ_k^(2l+1) e_k, with the odd powers built
/// by a^(2m+1) = {a a^(2m-1) a} from a = Σ λ_k e_k.
double odd_power_check(const TripotentResolution& r, int l);

/// (n, Λ, R) of the component N(n, Λ, R), Λ increasing. Throws ZeroElement.
ComponentSignature jb_signature(const Matrix& a, const Tolerance& tol = {});

/// Unitaries U (cols x cols) and V (rows x rows) with V a U = b.
/// Throws DifferentComponents, ShapeMismatch.
std::pair<Matrix, Matrix> connect_type1(const Matrix& a, const Matrix& b,
                                        const Tolerance& tol = {});

/// z = Σ i v_k + u with v_k in A(e_k) and u in Z_1/2(supp a).
struct ExtendedTangent {
  Matrix base;
  std::vector<Matrix> ia_part;  // the v_k (selfadjoint, not yet times i)
  Matrix half_part;

  Matrix total() const;
};

struct ExtendedTangentCheck {
  bool tangent = false;
  double residual = 0.0;
  ExtendedTangent decomposition;
};

/// Real-orthonormal basis (for Re tr(y* x)) of ⊕ iA(e_k) ⊕ Z_1/2(supp a): the
/// iA(e_k) block first, then b, ib for a complex basis b of Z_1/2.
/// Throws ZeroElement.
std::vector<Matrix> extended_tangent_basis(const Matrix& a, const Tolerance& tol = {});

ExtendedTangentCheck is_extended_tangent(const Matrix& a, const Matrix& z,
                                         const Tolerance& tol = {});

/// exp(g(supp a, z)) a. Throws NotTangent.
Matrix chart_ext(const Matrix& a, const Matrix& z, const Tolerance& tol = {});

struct NeherReport {
  double box_residual = 0.0;     // ||e□e - f□f|| on kernels
  double peirce_residual = 0.0;  // max(||P_1(f)e - e||, ||P_1(e)f - f||)
  bool box_equivalent = false;
  bool peirce_equivalent = false;

  bool agree() const { return box_equivalent == peirce_equivalent; }
};

/// Both formulations of e ~ f. Throws NotTripotent.
NeherReport neher_report(const Matrix& e, const Matrix& f, const Tolerance& tol = {});

/// e□e = f□f. Throws NotTripotent.
bool neher_equivalent(const Matrix& e, const Matrix& f, const Tolerance& tol = {});

/// e_k ~ f_k for every k, resolutions matched by value.
/// Throws DifferentComponents.
bool equivalent_elements(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

struct FiberSample {
  Matrix point;                 // exp(t g(supp a, iv)) a
  std::vector<Matrix> factors;  // ψ_k(t) = exp(t g(e_k, i v_k)) e_k
  std::vector<Matrix> v_parts;
  double factorization = 0.0;   // ||point - Σ λ_k ψ_k||
  double membership = 0.0;      // max ||P_1(e_k) ψ_k - ψ_k||
  double unit_circle = 0.0;     // max ||ψ_k^# - ψ_k^{-1}|| inside Z_1(e_k)
};

/// Throws NotInA when v is not a sum of selfadjoint elements of the Z_1(e_k).
FiberSample fiber_sample(const Matrix& a, const Matrix& v, double t,
                         const Tolerance& tol = {});

/// Support of a rectangular point: Σ e_k from its tripotent resolution.
SupportFn jb_support(const Tolerance& tol = {});

/// Geodesic t -> exp(t g(supp a, u)) a of the base manifold, u in
/// Z_1/2(supp a). Throws NotTangent, ZeroElement.
Geodesic base_geodesic(const Matrix& a, const Matrix& u, const Tolerance& tol = {});

double base_geodesic_residual(const Geodesic& g, double t, double step,
                              const Tolerance& tol = {});

}  // namespace jordangeo
