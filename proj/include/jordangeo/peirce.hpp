#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jordangeo/superop.hpp"
#include "jordangeo/triple.hpp"

namespace jordangeo {

/// Peirce eigenspaces of e□e, labelled by their eigenvalue.
enum class PeirceSpace { one, half, zero };

double eigenvalue(PeirceSpace k);
/// Space indexed by eigenvalue i - j + k, if it is one of 0, 1/2, 1.
std::optional<PeirceSpace> peirce_sum(PeirceSpace i, PeirceSpace j,
                                      PeirceSpace k);

struct PeirceDecomposition {
  Tripotent tripotent;
  SuperOperator p1;
  SuperOperator p12;
  SuperOperator p0;
  /// Frobenius-orthonormal bases of Z_1, Z_1/2, Z_0 in that order.
  std::vector<Matrix> basis1;
  std::vector<Matrix> basis12;
  std::vector<Matrix> basis0;

  const SuperOperator& projection(PeirceSpace k) const;
  const std::vector<Matrix>& basis(PeirceSpace k) const;
};

/// P_1 = Q(e)^2, P_1/2 = 2(e□e - Q(e)^2), P_0 = Id - 2 e□e + Q(e)^2.
PeirceDecomposition peirce_projections(const Tripotent& e);

/// P_k(e) z.
Matrix peirce_part(const Tripotent& e, const Matrix& z, PeirceSpace k);

/// P_k(e) z for a matrix already known to be a tripotent; evaluates the
/// projection formulas with triple products and skips validation.
Matrix peirce_component(const Matrix& e, const Matrix& z, PeirceSpace k);

/// Membership test ||P z - z|| <= tol.abs * max(1, ||z||).
bool in_peirce_space(const SuperOperator& projection, const Matrix& z,
                     const Tolerance& tol = {});

/// Orthonormal basis of the range of a complex-linear projection, obtained
/// from a rank-revealing QR of its kernel.
std::vector<Matrix> projection_basis(const SuperOperator& projection,
                                     double threshold = 1e-8);

/// Joint Peirce decomposition of a family of pairwise orthogonal tripotents.
///
/// Index pairs (j, k) with 0 <= j <= k <= n; index 0 stands for the common
/// zero space, 1..n for the tripotents.
struct JointPeirceDecomposition {
  std::vector<Tripotent> family;
  std::map<std::pair<int, int>, SuperOperator> projections;

  const SuperOperator& projection(int j, int k) const;
};

/// Z_{jj} = P_1(e_j); Z_{jk} = P_1/2(e_j) P_1/2(e_k);
/// Z_{0j} = P_1/2(e_j) prod_{k != j} P_0(e_k); Z_{00} = prod_k P_0(e_k).
/// Throws NotOrthogonalFamily.
JointPeirceDecomposition joint_peirce(const std::vector<Tripotent>& family,
                                      const Tolerance& tol = {});

struct PeirceRuleReport {
  /// Worst ||P_{i-j+k}{xyz} - {xyz}|| (or ||{xyz}|| when i-j+k is not a
  /// Peirce index) over all 27 index combinations.
  double rules = 0.0;
  /// Worst ||x□y|| kernel norm for x in Z_1, y in Z_0 (both orders).
  double one_box_zero = 0.0;
  std::size_t samples = 0;

  bool pass(const Tolerance& tol) const {
    return rules <= tol.abs && one_box_zero <= tol.abs;
  }
};

PeirceRuleReport verify_peirce_rules(const Tripotent& e, std::size_t samples,
                                     std::uint64_t seed);

/// z = h + i k with h, k in A(e) = {x in Z_1(e) : {e x e} = x}.
/// Throws NotInPeirceOne.
std::pair<Matrix, Matrix> selfadjoint_split(const Tripotent& e, const Matrix& z,
                                            const Tolerance& tol = {});

/// The involution x# = {e x e} of the JB*-algebra Z_1(e).
Matrix peirce_involution(const Tripotent& e, const Matrix& x);

/// S_e z = z_1 - z_1/2 + z_0, i.e. Id - 2 P_1/2(e); an involutive automorphism.
SuperOperator peirce_reflection(const Tripotent& e);

}  // namespace jordangeo
