#include <doctest.h>

#include "jordangeo/linalg.hpp"
#include "jordangeo/random.hpp"
#include "jordangeo/triple.hpp"
#include "support.hpp"

using namespace jordangeo;
using testing::dist;
using testing::E;
using testing::kPi;

TEST_SUITE("triple") {
  TEST_CASE("triple_product examples") {
    CHECK(triple_product(E(1, 1), E(1, 1), E(1, 1)) == E(1, 1));
    CHECK(triple_product(E(1, 2), E(1, 2), E(1, 2)) == E(1, 2));
    Rng rng(1);
    const Matrix z = rng.gaussian(3, 3);
    CHECK(dist(triple_product(identity(3), identity(3), z), z) < 1e-15);
    const Matrix a = rng.gaussian(2, 3), b = rng.gaussian(2, 3), c = rng.gaussian(2, 3);
    CHECK(triple_product(a, b, c) == triple_product(c, b, a));
    CHECK(dist(triple_product(a, b, c), 0.5 * (a * b.adjoint() * c + c * b.adjoint() * a)) <
          1e-14);
  }

  TEST_CASE("box and quad examples") {
    const SuperOperator l = box(E(1, 1), E(1, 1));
    CHECK(dist(l.apply(E(1, 2)), 0.5 * E(1, 2)) < 1e-15);
    CHECK(l.apply(E(2, 2)).norm() < 1e-15);
    CHECK(box(E(1, 2), E(2, 1)).apply(Matrix::Zero(2, 2)).norm() == 0.0);
    const SuperOperator q = quad(E(1, 1), E(1, 1));
    CHECK(dist(q.apply(E(1, 1)), E(1, 1)) < 1e-15);
    CHECK(dist(q.apply(testing::kI() * E(1, 1)), -testing::kI() * E(1, 1)) < 1e-15);
    CHECK(q.apply(E(1, 2)).norm() < 1e-15);
  }

  TEST_CASE("tripotents and orthogonality") {
    CHECK(is_tripotent(E(1, 1)));
    CHECK_FALSE(is_tripotent(2.0 * E(1, 1)));
    CHECK_FALSE(is_tripotent((E(1, 2) + E(2, 1)) / std::sqrt(2.0)));
    CHECK(is_tripotent(E(1, 2, 2, 3) + E(2, 3, 2, 3)));
    CHECK(are_orthogonal(E(1, 1), E(2, 2)));
    CHECK_FALSE(are_orthogonal(E(1, 1), E(1, 2)));
    Rng rng(2);
    CHECK(are_orthogonal(rng.gaussian(2, 2), Matrix::Zero(2, 2)));
    const Tripotent e(E(1, 2, 2, 3) + E(2, 3, 2, 3));
    CHECK(e.rank() == 2);
    CHECK_FALSE(e.minimal());
    try {
      Tripotent bad(2.0 * E(1, 1));
      FAIL("expected NotTripotent");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::NotTripotent);
    }
  }

  TEST_CASE("inner derivation examples") {
    const Matrix u = E(1, 2) + E(2, 1);
    const Derivation g = inner_derivation(E(1, 1), u);
    CHECK(dist(g.op.apply(E(1, 1)), -0.5 * u) < 1e-15);
    CHECK(inner_derivation(E(1, 1), Matrix::Zero(2, 2)).op.kernel().norm() == 0.0);
    const Matrix k = E(1, 2) - E(2, 1);
    Rng rng(3);
    for (int i = 0; i < 5; ++i) {
      const Matrix z = rng.gaussian(2, 2);
      CHECK(dist(g.op.apply(z), 0.5 * (k * z - z * k)) < 1e-14);
    }
  }

  TEST_CASE("derivation checks") {
    const auto samples = sample_matrices({2, 2}, 20, 7);
    const Derivation g = inner_derivation(E(1, 1), E(1, 2) + E(2, 1));
    const Check ok = is_triple_derivation(g.op, samples);
    CHECK(ok.pass);
    CHECK(ok.residual <= 1e-12);
    CHECK_FALSE(is_triple_derivation(SuperOperator::identity({2, 2}), samples).pass);
    CHECK(is_triple_derivation(SuperOperator::zero({2, 2}), samples).pass);
    CHECK(is_cstar_derivation(g.op, samples).pass);
    const Derivation skew = inner_derivation(E(1, 1), testing::kI() * (E(1, 2) + E(2, 1)));
    const Check bad = is_cstar_derivation(skew.op, samples);
    CHECK_FALSE(bad.pass);
    CHECK(bad.residual > 1e-4);
    CHECK(is_cstar_derivation(SuperOperator::zero({2, 2}), samples).pass);
  }

  TEST_CASE("triple_exp") {
    const Derivation g = inner_derivation(E(1, 1), E(1, 2) + E(2, 1));
    CHECK((triple_exp(g, 0.0).kernel() - identity(4)).norm() == 0.0);
    CHECK(dist(triple_exp(g, kPi).apply(E(1, 1)), E(2, 2)) < 1e-12);
    const Matrix lhs = triple_exp(g, 0.7).compose(triple_exp(g, -1.9)).kernel();
    CHECK((lhs - triple_exp(g, -1.2).kernel()).norm() < 1e-10);
    // against the two-sided oracle
    Rng rng(5);
    const Matrix z = rng.gaussian(2, 2);
    const Matrix s = E(1, 1), u = E(1, 2) + E(2, 1);
    CHECK(dist(triple_exp(g, 1.3).apply(z), testing::two_sided_geodesic(s, u, z, 1.3)) <
          1e-12);
  }

  TEST_CASE("automorphism checks") {
    const auto samples = sample_matrices({3, 3}, 10, 1);
    CHECK(is_triple_automorphism(SuperOperator::identity({3, 3}), samples).pass);
    CHECK_FALSE(is_triple_automorphism(2.0 * SuperOperator::identity({3, 3}), samples).pass);
    Rng rng(6);
    const Matrix v = rng.haar_unitary(3), w = rng.haar_unitary(3);
    const SuperOperator phi({3, 3}, {3, 3},
                            testing::brute_kernel([&](const Matrix& z) { return v * z * w; },
                                                  3, 3));
    CHECK(is_triple_automorphism(phi, samples).pass);
    try {
      is_triple_automorphism(SuperOperator::zero({3, 3}), samples);
      FAIL("expected Singular");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Singular);
    }
  }

  TEST_CASE("JB axioms") {
    Rng rng(12);
    for (int n = 1; n <= 4; ++n) {
      const AxiomReport r = check_jb_axioms(rng.gaussian(n, n), rng.gaussian(n, n),
                                            rng.gaussian(n, n), rng.gaussian(n, n));
      CHECK(r.pass(Tolerance{}));
      CHECK(r.min_spectrum >= -1e-9);
    }
    const Matrix zero = Matrix::Zero(2, 2);
    const AxiomReport r0 = check_jb_axioms(zero, rng.gaussian(2, 2), rng.gaussian(2, 2),
                                           rng.gaussian(2, 2));
    CHECK(r0.norm_identity == 0.0);
    CHECK(r0.hermitian == 0.0);
  }
}
