#pragma once

#include <functional>
#include <vector>

#include "jordangeo/spectral.hpp"
#include "jordangeo/triple.hpp"
#include "jordangeo/types.hpp"

namespace jordangeo {

// Geometry of the components M(n, Λ, R) of normal algebraic elements in M_d.
//
// A point a has support s = supp a; its tangent space is the Peirce space
// Z_1/2(s). Curves through a are generated by the inner derivations
// g(s, u) = s□u - u□s, and geodesics are t -> exp(t g(s, u)) a.

/// An element of Z together with its base point and tangency verdict.
struct TangentVector {
  Matrix base;
  Matrix vector;
  bool verified = false;
};

/// Result of is_tangent: the verdict, the residual ||2{ssu} - u||, the
/// components u_k = e_k u + u e_k, and the worst violation of
/// e_j u_k = u_k e_j = 0 (j != k).
struct TangentDecomposition {
  bool tangent = false;
  double residual = 0.0;
  std::vector<Matrix> components;
  double orthogonality = 0.0;
};

/// Z-valued vector field on a component, evaluated pointwise.
/// Evaluators must be reentrant.
struct VectorField {
  std::function<Matrix(const Matrix&)> evaluate;
  double fd_step = 1e-5;

  Matrix operator()(const Matrix& point) const { return evaluate(point); }
};

struct Geodesic {
  Matrix base;
  Matrix direction;
  Derivation derivation;
};

struct MetricValue {
  Complex hermitian;
  double riemannian = 0.0;
};

/// Maps a point to its support tripotent.
using SupportFn = std::function<Matrix(const Matrix&)>;

/// C*-algebra support: the sum of spectral projections of nonzero values.
SupportFn cstar_support(const Tolerance& tol = {});

/// Support tripotent U_r V_r* of any element, from the singular vectors of
/// the singular values above tol.cluster(). For normal a it has the same
/// Peirce projections as the C*-support. Off the normal set (where
/// exp(g(s, u)) a lands for non-selfadjoint u) it is the only one defined.
Matrix triple_support(const Matrix& b, const Tolerance& tol = {});
SupportFn triple_support_fn(const Tolerance& tol = {});

/// P_1/2(s) z for a tripotent s, without validation.
Matrix half_projection(const Matrix& s, const Matrix& z);

/// Frobenius-orthonormal complex basis of Z_1/2(supp a).
/// Throws ZeroElement, NotNormal.
std::vector<Matrix> tangent_space_basis(const Matrix& a, const Tolerance& tol = {});

/// Throws ZeroElement.
TangentDecomposition is_tangent(const Matrix& a, const Matrix& u,
                                const Tolerance& tol = {});

/// Φ_a(x) = g(s, x) a = {s x a} - {x s a}. Throws ZeroElement.
Matrix phi(const Matrix& a, const Matrix& x, const Tolerance& tol = {});

/// Closed form -2i Σ λ_k v_k - ½ Σ λ_k u_k of Φ_a on x = i v + u, where
/// v = Σ v_k with v_k selfadjoint in Z_1(e_k) and u in Z_1/2(supp a).
Matrix phi_closed_form(const SpectralResolution& res,
                       const std::vector<Matrix>& v_parts, const Matrix& u);

/// Inverse of Φ_a on Z_1/2(supp a): x = Σ_k -2 y_k / λ_k. Throws NotTangent.
Matrix phi_restricted_inverse(const Matrix& a, const Matrix& y,
                              const Tolerance& tol = {});

/// Smallest singular value of u -> g(s, u) a written in the tangent basis.
double tangent_map_min_singular_value(const Matrix& a, const Tolerance& tol = {});

/// f(u) = exp(g(s, u)) a. Throws NotTangent.
Matrix chart(const Matrix& a, const Matrix& u, const Tolerance& tol = {});

/// Local inverse of `chart` by a damped fixed-point iteration seeded with
/// phi_restricted_inverse. Only defined for ||u|| <= ½ min |λ_k|; throws
/// InvalidArgument outside that radius or without convergence.
Matrix chart_inverse(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

/// Throws NotTangent, ZeroElement.
Geodesic make_geodesic(const Matrix& a, const Matrix& u, const Tolerance& tol = {});

/// γ(t) = exp(t g(s, u)) a.
Matrix geodesic_point(const Geodesic& g, double t);

/// ||P_1/2(supp c(t)) c''(t)|| with c'' by a central second difference.
double curve_residual(const std::function<Matrix(double)>& curve, double t,
                      double step, const SupportFn& support_of);

/// curve_residual for a geodesic, with triple_support at each point.
double geodesic_residual(const Geodesic& g, double t, double step,
                         const Tolerance& tol = {});

/// (∇_X Y)_a = P_1/2(supp a) Y'_a X_a, with Y'_a X_a a central difference of Y
/// along the curve t -> exp(t g(s, Φ_a^{-1} X_a)) a, whose velocity at 0 is X_a.
Matrix connection(const VectorField& x, const VectorField& y, const Matrix& a,
                  const Tolerance& tol = {});

/// Y'_a X_a (no projection).
Matrix field_derivative(const VectorField& x, const VectorField& y,
                        const Matrix& a, const Tolerance& tol = {});

/// [X, Y]_a = Y'_a X_a - X'_a Y_a.
Matrix lie_bracket(const VectorField& x, const VectorField& y, const Matrix& a,
                   const Tolerance& tol = {});

/// ||∇_X Y - ∇_Y X - [X, Y]|| at a.
double torsion_residual(const VectorField& x, const VectorField& y,
                        const Matrix& a, const Tolerance& tol = {});

/// g_a(u, v) = trace(v* u) on tangent vectors. Throws NotTangent.
MetricValue riemann_metric(const Matrix& a, const Matrix& u, const Matrix& v,
                           const Tolerance& tol = {});

/// |X g(Y, W) - g(∇_X Y, W) - g(Y, ∇_X W)| at a, in the hermitian form.
double check_metric_compatibility(const VectorField& x, const VectorField& y,
                                  const VectorField& w, const Matrix& a,
                                  const Tolerance& tol = {});

/// ||∇_X (iY) - i ∇_X Y|| at a.
double check_hermitian_connection(const VectorField& x, const VectorField& y,
                                  const Matrix& a, const Tolerance& tol = {});

/// S_{supp a} z = z - 2 P_1/2(supp a) z. Throws ZeroElement.
Matrix symmetry_at(const Matrix& a, const Matrix& z, const Tolerance& tol = {});

/// Tangent field b -> P_1/2(supp b) p(b) for
/// p(b) = c0 + c1 b + b c2 + c3 b* + b c4 b, with supp the triple support.
/// With `selfadjoint`, p(b) is replaced by (p(b) + p(b)*) / 2.
/// `coefficients` must hold five matrices of the point's shape.
VectorField polynomial_field(std::vector<Matrix> coefficients,
                             const Tolerance& tol = {}, bool selfadjoint = false);

/// b -> i Y(b).
VectorField times_i(const VectorField& y);

}  // namespace jordangeo
