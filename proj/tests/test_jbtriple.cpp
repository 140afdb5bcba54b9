#include <doctest.h>

#include "jordangeo/jbtriple.hpp"
#include "jordangeo/linalg.hpp"
#include "jordangeo/peirce.hpp"
#include "jordangeo/random.hpp"
#include "support.hpp"

using namespace jordangeo;
using testing::diag;
using testing::dist;
using testing::E;
using testing::kPi;

TEST_SUITE("jbtriple") {
  TEST_CASE("jb_spectral of a diagonal block") {
    Matrix a = Matrix::Zero(2, 3);
    a(0, 0) = 3;
    a(1, 1) = 1;
    const TripotentResolution r = jb_spectral(a);
    REQUIRE(r.size() == 2);
    CHECK(r.values[0] == doctest::Approx(1.0));
    CHECK(r.values[1] == doctest::Approx(3.0));
    CHECK(dist(r.tripotents[0], E(2, 2, 2, 3)) < 1e-12);
    CHECK(dist(r.tripotents[1], E(1, 1, 2, 3)) < 1e-12);
    CHECK(dist(r.reconstruct(), a) < 1e-12);
    CHECK(dist(r.support(), E(1, 1, 2, 3) + E(2, 2, 2, 3)) < 1e-12);
    const ComponentSignature s = jb_signature(a);
    CHECK(s.n() == 2);
    CHECK(s.ranks == std::vector<Eigen::Index>{1, 1});
  }

  TEST_CASE("jb_spectral of a multiple of a partial isometry") {
    Rng rng(1);
    const Matrix e = random_tripotent(rng, 3, 5, 2);
    const TripotentResolution r = jb_spectral(2.5 * e);
    REQUIRE(r.size() == 1);
    CHECK(r.values[0] == doctest::Approx(2.5));
    CHECK(r.ranks[0] == 2);
    CHECK(dist(r.tripotents[0], e) < 1e-12);
    try {
      jb_spectral(Matrix::Zero(2, 3));
      FAIL("expected ZeroElement");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::ZeroElement);
    }
  }

  TEST_CASE("jb_spectral matches the C*-resolution on positive normal matrices") {
    Rng rng(2);
    const Matrix a = random_normal_element(rng, {4, 1}, {1, 1}, 2);
    const TripotentResolution r = jb_spectral(a);
    const SpectralResolution c = spectral_resolution(a);
    REQUIRE(r.size() == c.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
      CHECK(std::abs(Complex(r.values[k]) - c.values[k]) < 1e-10);
      CHECK(dist(r.tripotents[k], c.projections[k]) < 1e-10);
    }
  }

  TEST_CASE("odd powers") {
    Rng rng(3);
    const Matrix e = random_tripotent(rng, 3, 3, 1);
    const TripotentResolution r = jb_spectral(2.0 * e);
    CHECK(odd_power_check(r, 0) == 0.0);
    CHECK(dist(triple_product(2.0 * e, 2.0 * e, 2.0 * e), 8.0 * e) < 1e-12);
    CHECK(odd_power_check(r, 1) < 1e-12);
    const Matrix a = random_jb_element(rng, {0.5, 1.0, 2.0}, {1, 1, 1}, 3, 4);
    const TripotentResolution ra = jb_spectral(a);
    for (int l = 0; l <= 3; ++l) CHECK(odd_power_check(ra, l) <= 1e-8);
  }

  TEST_CASE("jb_signature is invariant under V . U") {
    Rng rng(4);
    const Matrix a = random_jb_element(rng, {1.0, 2.0}, {2, 1}, 3, 5);
    const Matrix b = rng.haar_unitary(3) * a * rng.haar_unitary(5);
    CHECK(jb_signature(a).matches(jb_signature(b), 1e-9));
  }

  TEST_CASE("connect_type1") {
    auto [u, v] = connect_type1(E(1, 1), E(2, 2));
    CHECK(dist(v * E(1, 1) * u, E(2, 2)) < 1e-12);
    CHECK(dist(u.adjoint() * u, identity(2)) < 1e-12);
    CHECK(dist(v.adjoint() * v, identity(2)) < 1e-12);
    std::tie(u, v) = connect_type1(E(1, 1), E(1, 1));
    CHECK(dist(v * E(1, 1) * u, E(1, 1)) < 1e-12);
    Rng rng(5);
    for (int p = 1; p <= 4; ++p) {
      for (int q = 1; q <= 4; ++q) {
        const int r = std::min(p, q);
        const std::vector<double> vals = r > 1 ? std::vector<double>{1.0, 3.0}
                                               : std::vector<double>{2.0};
        const std::vector<Eigen::Index> ranks =
            r > 1 ? std::vector<Eigen::Index>{1, r - 1} : std::vector<Eigen::Index>{1};
        const Matrix a = random_jb_element(rng, vals, ranks, p, q);
        const Matrix b = random_jb_element(rng, vals, ranks, p, q);
        std::tie(u, v) = connect_type1(a, b);
        CHECK(dist(v * a * u, b) <= 1e-9);
        CHECK(dist(u.adjoint() * u, identity(q)) < 1e-10);
        CHECK(dist(v.adjoint() * v, identity(p)) < 1e-10);
      }
    }
    try {
      connect_type1(E(1, 1), 2.0 * E(2, 2));
      FAIL("expected DifferentComponents");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::DifferentComponents);
    }
  }

  TEST_CASE("extended tangent space") {
    const auto basis = extended_tangent_basis(2.0 * E(1, 1));
    // iA(E11) is one real dimension, Z_1/2 = span{E12, E21} is four
    CHECK(basis.size() == 5);
    CHECK(dist(basis[0], testing::kI() * E(1, 1)) < 1e-12);
    // real orthonormality
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const double ip = (basis[j].adjoint() * basis[i]).trace().real();
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    Rng rng(6);
    const Matrix a = random_jb_element(rng, {1.0, 2.0}, {2, 1}, 3, 4);
    // A(e_k) has real dimension r_k^2; Z_1/2 of a rank 3 tripotent in M_{3x4}
    // has complex dimension 3*4 - 3*3 - 0*1
    const std::size_t half = 2 * (3 * 4 - 3 * 3);
    CHECK(extended_tangent_basis(a).size() == 4 + 1 + half);
    CHECK(is_extended_tangent(a, Matrix::Zero(3, 4)).tangent);
    CHECK(is_extended_tangent(a, extended_tangent_basis(a).back()).tangent);
    CHECK_FALSE(is_extended_tangent(2.0 * E(1, 1), E(1, 1)).tangent);
  }

  TEST_CASE("chart_ext") {
    const Matrix e = E(1, 1);
    CHECK(dist(chart_ext(e, Matrix::Zero(2, 2)), e) < 1e-15);
    // z = i v with v = θ e walks the circle: exp(g(e, iθe)) e = e^{-2iθ} e
    for (double theta : {0.3, kPi / 2, kPi}) {
      const Matrix p = chart_ext(e, testing::kI() * theta * e);
      CHECK(dist(p, std::exp(Complex(0, -2 * theta)) * e) < 1e-12);
    }
    Rng rng(7);
    const Matrix a = random_jb_element(rng, {1.0, 3.0}, {1, 1}, 3, 3);
    const auto basis = extended_tangent_basis(a);
    Matrix z = Matrix::Zero(3, 3);
    for (const Matrix& b : basis) z += 0.1 * rng.normal() * b;
    CHECK(jb_signature(chart_ext(a, z)).matches(jb_signature(a), 1e-9));
    try {
      chart_ext(2.0 * E(1, 1), E(1, 1));
      FAIL("expected NotTangent");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::NotTangent);
    }
  }

  TEST_CASE("Neher equivalence") {
    const Matrix e = E(1, 1);
    CHECK(neher_equivalent(e, std::exp(Complex(0, 0.7)) * e));
    CHECK_FALSE(neher_equivalent(E(1, 1), E(2, 2)));
    CHECK(neher_equivalent(e, e));
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
      const Matrix f = random_tripotent(rng, 3, 3, rng.uniform_int(1, 2));
      const Matrix g = random_tripotent(rng, 3, 3, rng.uniform_int(1, 2));
      CHECK(neher_report(f, g).agree());
      CHECK(neher_report(f, std::exp(Complex(0, 1.1)) * f).agree());
      CHECK(neher_report(f, std::exp(Complex(0, 1.1)) * f).box_equivalent);
    }
  }

  TEST_CASE("equivalent_elements") {
    Rng rng(9);
    const Matrix a = random_jb_element(rng, {1.0, 2.0}, {1, 1}, 3, 3);
    const TripotentResolution r = jb_spectral(a);
    Matrix b = Matrix::Zero(3, 3);
    for (std::size_t k = 0; k < r.size(); ++k)
      b += r.values[k] * std::exp(Complex(0, 0.4 + k)) * r.tripotents[k];
    CHECK(equivalent_elements(a, b));
    CHECK(equivalent_elements(a, a));
    const Matrix c = random_jb_element(rng, {1.0, 2.0}, {1, 1}, 3, 3);
    CHECK_FALSE(equivalent_elements(a, c));
    try {
      equivalent_elements(a, 2.0 * a);
      FAIL("expected DifferentComponents");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::DifferentComponents);
    }
  }

  TEST_CASE("fiber samples") {
    Rng rng(10);
    const Matrix e = random_tripotent(rng, 2, 3, 1);
    const FiberSample f0 = fiber_sample(e, e, 0.0);
    CHECK(dist(f0.point, e) < 1e-15);
    REQUIRE(f0.factors.size() == 1);
    CHECK(dist(f0.factors[0], e) < 1e-15);
    for (double t : {0.0, kPi / 2, kPi, 2.3}) {
      const FiberSample f = fiber_sample(e, e, t);
      // rank one: ψ(t) = c e with |c| = 1
      const Complex c = (e.adjoint() * f.factors[0]).trace();
      CHECK(std::abs(std::abs(c) - 1.0) < 1e-12);
      CHECK(dist(f.factors[0], c * e) < 1e-12);
      CHECK(f.factorization <= 1e-8);
      CHECK(f.unit_circle <= 1e-8);
      CHECK(equivalent_elements(e, f.point));
    }
    const Matrix a = random_jb_element(rng, {1.0, 2.5}, {2, 1}, 4, 4);
    const TripotentResolution r = jb_spectral(a);
    Matrix v = Matrix::Zero(4, 4);
    // selfadjoint elements of Z_1(l r*) are l H r* with H hermitian
    for (std::size_t k = 0; k < r.size(); ++k) {
      const Matrix h = testing::random_hermitian(rng, r.ranks[k]);
      v += r.left[k] * h * r.right[k].adjoint();
    }
    for (double t : {0.5, 1.7}) {
      const FiberSample f = fiber_sample(a, v, t);
      CHECK(f.factorization <= 1e-8);
      CHECK(f.unit_circle <= 1e-8);
      CHECK(equivalent_elements(a, f.point));
    }
    const Matrix s = r.support();
    const Matrix leak = half_projection(s, rng.gaussian(4, 4));
    try {
      fiber_sample(a, v + leak, 1.0);
      FAIL("expected NotInA");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::NotInA);
    }
  }

  TEST_CASE("base manifold geodesics") {
    Rng rng(11);
    const Matrix a = random_jb_element(rng, {1.0, 2.0}, {1, 1}, 3, 4);
    const Matrix s = jb_spectral(a).support();
    Matrix u = half_projection(s, rng.gaussian(3, 4));
    u /= u.norm();
    const Geodesic g = base_geodesic(a, u);
    CHECK(geodesic_point(g, 0.0) == a);
    for (double t : {-1.5, 0.3, 2.0}) {
      CHECK(dist(geodesic_point(g, t), testing::two_sided_geodesic(s, u, a, t)) < 1e-10);
      CHECK(base_geodesic_residual(g, t, 1e-4) <= 1e-6);
    }
    const double h = 1e-4;
    const Matrix vel = (geodesic_point(g, h) - geodesic_point(g, -h)) / (2 * h);
    CHECK(dist(vel, triple_product(s, u, a) - triple_product(u, s, a)) < 1e-6);
    // the Peirce reflection of supp a exchanges u and -u
    const Matrix plus = geodesic_point(g, 0.6);
    const Matrix minus = geodesic_point(base_geodesic(a, -u), 0.6);
    CHECK(dist(plus - 2.0 * half_projection(s, plus), minus) < 1e-10);
    try {
      base_geodesic(a, s);
      FAIL("expected NotTangent");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::NotTangent);
    }
  }
}
