#include <doctest.h>

#include "jordangeo/linalg.hpp"
#include "jordangeo/peirce.hpp"
#include "jordangeo/random.hpp"
#include "support.hpp"

using namespace jordangeo;
using testing::dist;
using testing::E;

namespace {

// Range of a complex-linear projection, as the dimension of its image.
Eigen::Index rank_of(const SuperOperator& p) { return numerical_rank(p.kernel(), 1e-8); }

}  // namespace

TEST_SUITE("peirce") {
  TEST_CASE("Peirce spaces of E11 in M2") {
    const PeirceDecomposition pd = peirce_projections(Tripotent(E(1, 1)));
    CHECK(pd.basis1.size() == 1);
    CHECK(pd.basis12.size() == 2);
    CHECK(pd.basis0.size() == 1);
    CHECK(dist(pd.p1.apply(E(1, 1)), E(1, 1)) < 1e-15);
    CHECK(dist(pd.p12.apply(E(1, 2)), E(1, 2)) < 1e-15);
    CHECK(dist(pd.p12.apply(E(2, 1)), E(2, 1)) < 1e-15);
    CHECK(dist(pd.p0.apply(E(2, 2)), E(2, 2)) < 1e-15);
    Rng rng(1);
    for (int i = 0; i < 5; ++i) {
      const Matrix z = rng.gaussian(2, 2);
      CHECK(dist(pd.p1.apply(z), E(1, 1) * z * E(1, 1)) < 1e-14);
    }
  }

  TEST_CASE("unitary tripotent has only a Peirce-1 space") {
    const PeirceDecomposition pd = peirce_projections(Tripotent(identity(2)));
    CHECK((pd.p1.kernel() - identity(4)).norm() < 1e-14);
    CHECK(pd.p12.kernel().norm() < 1e-14);
    CHECK(pd.p0.kernel().norm() < 1e-14);
    CHECK(pd.basis12.empty());
    CHECK(pd.basis0.empty());
  }

  TEST_CASE("peirce_part examples") {
    const Tripotent e(E(1, 1));
    CHECK(dist(peirce_part(e, E(1, 2), PeirceSpace::half), E(1, 2)) < 1e-15);
    CHECK(peirce_part(e, E(1, 2), PeirceSpace::one).norm() < 1e-15);
    CHECK(peirce_part(e, E(1, 2), PeirceSpace::zero).norm() < 1e-15);
    CHECK(dist(peirce_part(e, e.matrix(), PeirceSpace::one), e.matrix()) < 1e-15);
    CHECK(dist(peirce_part(e, identity(2), PeirceSpace::one), E(1, 1)) < 1e-15);
    CHECK(peirce_part(e, identity(2), PeirceSpace::half).norm() < 1e-15);
    CHECK(dist(peirce_part(e, identity(2), PeirceSpace::zero), E(2, 2)) < 1e-15);
  }

  TEST_CASE("Peirce projections of a rectangular tripotent match the block oracle") {
    // e = l r* with orthonormal columns l, r: Z_1 = l l* z r r*,
    // Z_0 = (1 - l l*) z (1 - r r*), Z_1/2 the rest.
    Rng rng(4);
    const Matrix e = random_tripotent(rng, 3, 4, 2);
    const Matrix pl = e * e.adjoint(), pr = e.adjoint() * e;
    const Matrix ql = identity(3) - pl, qr = identity(4) - pr;
    const Tripotent t(e);
    for (int i = 0; i < 5; ++i) {
      const Matrix z = rng.gaussian(3, 4);
      CHECK(dist(peirce_part(t, z, PeirceSpace::one), pl * z * pr) < 1e-12);
      CHECK(dist(peirce_part(t, z, PeirceSpace::zero), ql * z * qr) < 1e-12);
      CHECK(dist(peirce_part(t, z, PeirceSpace::half), pl * z * qr + ql * z * pr) < 1e-12);
      CHECK(dist(peirce_component(e, z, PeirceSpace::half), pl * z * qr + ql * z * pr) <
            1e-12);
    }
    const PeirceDecomposition pd = peirce_projections(t);
    CHECK(pd.basis1.size() == 4);
    CHECK(pd.basis12.size() == 2 * 2 + 1 * 2);
    CHECK(pd.basis0.size() == 2);
  }

  TEST_CASE("peirce_sum") {
    using P = PeirceSpace;
    CHECK(peirce_sum(P::one, P::one, P::one) == P::one);
    CHECK(peirce_sum(P::half, P::one, P::half) == P::zero);
    CHECK(peirce_sum(P::one, P::zero, P::one) == std::nullopt);
    CHECK(peirce_sum(P::half, P::half, P::half) == P::half);
    CHECK(eigenvalue(P::half) == 0.5);
  }

  TEST_CASE("joint Peirce decomposition of (E11, E22) in M3") {
    const std::vector<Tripotent> fam{Tripotent(E(1, 1, 3)), Tripotent(E(2, 2, 3))};
    const JointPeirceDecomposition j = joint_peirce(fam);
    auto span_check = [&](int a, int b, std::vector<Matrix> units) {
      const SuperOperator& p = j.projection(a, b);
      CHECK(rank_of(p) == static_cast<Eigen::Index>(units.size()));
      for (const Matrix& m : units) CHECK(dist(p.apply(m), m) < 1e-14);
    };
    span_check(1, 1, {E(1, 1, 3)});
    span_check(2, 2, {E(2, 2, 3)});
    span_check(1, 2, {E(1, 2, 3), E(2, 1, 3)});
    span_check(0, 1, {E(1, 3, 3), E(3, 1, 3)});
    span_check(0, 2, {E(2, 3, 3), E(3, 2, 3)});
    span_check(0, 0, {E(3, 3, 3)});
    Matrix sum = Matrix::Zero(9, 9);
    for (const auto& [key, p] : j.projections) sum += p.kernel();
    CHECK((sum - identity(9)).norm() < 1e-13);
  }

  TEST_CASE("joint Peirce with one tripotent reduces to the plain decomposition") {
    const Tripotent e(E(1, 1, 3));
    const JointPeirceDecomposition j = joint_peirce({e});
    const PeirceDecomposition pd = peirce_projections(e);
    CHECK((j.projection(0, 1).kernel() - pd.p12.kernel()).norm() < 1e-14);
    CHECK((j.projection(0, 0).kernel() - pd.p0.kernel()).norm() < 1e-14);
    CHECK((j.projection(1, 1).kernel() - pd.p1.kernel()).norm() < 1e-14);
  }

  TEST_CASE("joint Peirce rejects non-orthogonal families") {
    try {
      joint_peirce({Tripotent(E(1, 1)), Tripotent(E(1, 2))});
      FAIL("expected NotOrthogonalFamily");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotOrthogonalFamily);
    }
  }

  TEST_CASE("Peirce multiplication rules") {
    const PeirceRuleReport r = verify_peirce_rules(Tripotent(E(1, 1)), 20, 3);
    CHECK(r.rules <= 1e-12);
    CHECK(r.one_box_zero <= 1e-12);
    CHECK(r.pass(Tolerance{}));
    Rng rng(6);
    const PeirceRuleReport r2 = verify_peirce_rules(Tripotent(random_tripotent(rng, 3, 3, 2)),
                                                    20, 4);
    CHECK(r2.pass(Tolerance{}));
  }

  TEST_CASE("selfadjoint_split") {
    const Tripotent e(E(1, 1));
    auto [h, k] = selfadjoint_split(e, E(1, 1));
    CHECK(dist(h, E(1, 1)) < 1e-15);
    CHECK(k.norm() < 1e-15);
    std::tie(h, k) = selfadjoint_split(e, testing::kI() * E(1, 1));
    CHECK(h.norm() < 1e-15);
    CHECK(dist(k, E(1, 1)) < 1e-15);
    std::tie(h, k) = selfadjoint_split(e, Complex(1, 2) * E(1, 1));
    CHECK(dist(h, E(1, 1)) < 1e-15);
    CHECK(dist(k, 2.0 * E(1, 1)) < 1e-15);
    CHECK(dist(peirce_involution(e, Complex(1, 2) * E(1, 1)), Complex(1, -2) * E(1, 1)) <
          1e-15);
    try {
      selfadjoint_split(e, E(1, 2));
      FAIL("expected NotInPeirceOne");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::NotInPeirceOne);
    }
  }

  TEST_CASE("Peirce reflection") {
    const Tripotent e(E(1, 1));
    const SuperOperator s = peirce_reflection(e);
    Matrix z(2, 2), flipped(2, 2);
    z << Complex(1, 1), 2, 3, Complex(0, 4);
    flipped << Complex(1, 1), -2, -3, Complex(0, 4);
    CHECK(dist(s.apply(z), flipped) < 1e-15);
    CHECK(dist(s.apply(e.matrix()), e.matrix()) < 1e-15);
    CHECK((s.compose(s).kernel() - identity(4)).norm() < 1e-14);
    Rng rng(7);
    const auto samples = sample_matrices({2, 2}, 10, 8);
    CHECK(is_triple_automorphism(s, samples).pass);
  }
}
