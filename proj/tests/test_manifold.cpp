#include <doctest.h>

#include "jordangeo/linalg.hpp"
#include "jordangeo/manifold.hpp"
#include "jordangeo/peirce.hpp"
#include "jordangeo/random.hpp"
#include "support.hpp"

using namespace jordangeo;
using testing::diag;
using testing::dist;
using testing::E;
using testing::kPi;

namespace {

// Random element of Z_1/2(supp a) for a normal a.
Matrix random_tangent(Rng& rng, const Matrix& a, double scale = 1.0) {
  const Matrix s = support(a).projection;
  const Matrix z = rng.gaussian(a.rows(), a.cols());
  const Matrix u = half_projection(s, z);
  return scale * u / std::max(u.norm(), 1e-300);
}

}  // namespace

TEST_SUITE("manifold") {
  TEST_CASE("tangent_space_basis") {
    const auto b1 = tangent_space_basis(2.0 * E(1, 1));
    CHECK(b1.size() == 2);
    for (const Matrix& m : b1) CHECK((m(0, 0) == Complex(0) && m(1, 1) == Complex(0)));
    CHECK(tangent_space_basis(diag({2, 5})).empty());
    const auto b3 = tangent_space_basis(diag({2, 5, 0}));
    CHECK(b3.size() == 4);
    const Matrix s = diag({1, 1, 0});
    for (const Matrix& m : b3) CHECK(dist(half_projection(s, m), m) < 1e-12);
  }

  TEST_CASE("is_tangent") {
    const Matrix a = diag({2, 5, 0});
    const TangentDecomposition d = is_tangent(a, E(1, 3, 3) + E(3, 1, 3));
    CHECK(d.tangent);
    REQUIRE(d.components.size() == 2);
    CHECK(dist(d.components[0], E(1, 3, 3) + E(3, 1, 3)) < 1e-12);
    CHECK(d.components[1].norm() < 1e-12);
    CHECK_FALSE(is_tangent(a, E(1, 2, 3)).tangent);
    CHECK(is_tangent(a, Matrix::Zero(3, 3)).tangent);
  }

  TEST_CASE("phi: closed form and restricted inverse") {
    CHECK(phi(2.0 * E(1, 1), Matrix::Zero(2, 2)).norm() == 0.0);
    const Matrix y = E(1, 2) + E(2, 1);
    CHECK(dist(phi_restricted_inverse(2.0 * E(1, 1), y), -y) < 1e-12);
    CHECK(phi_restricted_inverse(2.0 * E(1, 1), Matrix::Zero(2, 2)).norm() == 0.0);

    Rng rng(21);
    const Matrix a = random_normal_element(rng, {Complex(1, 1), -2}, {1, 2}, 5);
    const SpectralResolution res = spectral_resolution(a);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix u = random_tangent(rng, a);
      std::vector<Matrix> vs;
      Matrix v = Matrix::Zero(5, 5);
      for (const Matrix& e : res.projections) {
        const Matrix h = testing::random_hermitian(rng, 5);
        vs.push_back(e * h * e);
        v += vs.back();
      }
      const Matrix x = testing::kI() * v + u;
      CHECK(dist(phi(a, x), phi_closed_form(res, vs, u)) <= 1e-10);
      const Matrix y = random_tangent(rng, a);
      CHECK(dist(phi(a, phi_restricted_inverse(a, y)), y) <= 1e-10);
    }
    CHECK(tangent_map_min_singular_value(a) > 0.0);
    try {
      phi_restricted_inverse(diag({2, 5, 0}), E(1, 2, 3));
      FAIL("expected NotTangent");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotTangent);
    }
  }

  TEST_CASE("chart") {
    const Matrix a = E(1, 1), u = E(1, 2) + E(2, 1);
    CHECK(chart(a, Matrix::Zero(2, 2)) == a);
    for (double t : {0.4, 1.0, 2.2}) {
      const double c = std::cos(t / 2), s = std::sin(t / 2);
      Matrix want(2, 2);
      want << c * c, -c * s, -c * s, s * s;
      CHECK(dist(chart(a, t * u), want) < 1e-12);
    }
    Rng rng(22);
    const Matrix b = random_normal_element(rng, {1, 3}, {1, 1}, 4);
    for (int i = 0; i < 5; ++i) {
      // selfadjoint directions stay normal; complex ones only keep singular values
      const Matrix v = random_tangent(rng, b, rng.uniform(0.1, 1.0));
      const Matrix h = 0.5 * (v + v.adjoint());
      CHECK(signature(chart(b, h)).matches(signature(b), 1e-9));
      const Eigen::VectorXd sv = chart(b, v).jacobiSvd().singularValues();
      CHECK((sv - b.jacobiSvd().singularValues()).norm() < 1e-10);
    }
    try {
      chart(diag({2, 5, 0}), E(1, 2, 3));
      FAIL("expected NotTangent");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotTangent);
    }
  }

  TEST_CASE("chart_inverse inverts chart near the base point") {
    Rng rng(23);
    const Matrix a = random_normal_element(rng, {2, Complex(0, 3)}, {1, 1}, 4);
    const Matrix u = random_tangent(rng, a, 0.5);
    CHECK(dist(chart_inverse(a, chart(a, u)), u) < 1e-8);
    CHECK(chart_inverse(a, a).norm() < 1e-12);
  }

  TEST_CASE("geodesics: closed form, oracle, residual") {
    const Geodesic g = make_geodesic(E(1, 1), E(1, 2) + E(2, 1));
    CHECK(geodesic_point(g, 0.0) == E(1, 1));
    CHECK(dist(geodesic_point(g, kPi), E(2, 2)) < 1e-9);
    for (double t : {-2.0, -0.5, 1.0, 2.0}) CHECK(geodesic_residual(g, t, 1e-4) <= 1e-6);

    Rng rng(24);
    const Matrix a = random_normal_element(rng, {Complex(1, -1), 2, 4}, {1, 1, 1}, 5);
    const Matrix s = support(a).projection;
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix u = random_tangent(rng, a);
      const Geodesic geo = make_geodesic(a, u);
      for (double t : {-2.0, -0.7, 0.9, 2.0}) {
        CHECK(dist(geodesic_point(geo, t), testing::two_sided_geodesic(s, u, a, t)) < 1e-10);
        CHECK(geodesic_residual(geo, t, 1e-4) <= 1e-6);
      }
      // velocity at 0 is g(s, u) a
      const double h = 1e-4;
      const Matrix vel = (geodesic_point(geo, h) - geodesic_point(geo, -h)) / (2 * h);
      CHECK(dist(vel, phi(a, u)) <= 10 * h * h * std::max(1.0, a.norm() * u.norm() * u.norm()));
    }
    const Geodesic still = make_geodesic(a, Matrix::Zero(5, 5));
    CHECK(geodesic_residual(still, 0.7, 1e-4) == 0.0);
    try {
      make_geodesic(diag({2, 5, 0}), E(1, 2, 3));
      FAIL("expected NotTangent");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotTangent);
    }
  }

  TEST_CASE("non-geodesic curves are detected") {
    Rng rng(25);
    const Matrix a = random_normal_element(rng, {1, 2}, {1, 1}, 3);
    const Matrix u = random_tangent(rng, a), w = random_tangent(rng, a);
    const auto curve = [&](double t) { return chart(a, t * u + t * t * w); };
    double worst = 0.0;
    for (double t : {-1.0, -0.3, 0.0, 0.5, 1.2})
      worst = std::max(worst, curve_residual(curve, t, 1e-4, triple_support_fn()));
    CHECK(worst > 1e-3);
  }

  TEST_CASE("metric values") {
    const Matrix a = 2.0 * E(1, 1), u = E(1, 2) + E(2, 1);
    const MetricValue m = riemann_metric(a, u, u);
    CHECK(m.riemannian == doctest::Approx(2.0));
    CHECK(std::abs(m.hermitian - Complex(2)) < 1e-14);
    CHECK(std::abs(riemann_metric(a, Matrix::Zero(2, 2), u).hermitian) == 0.0);
    Rng rng(26);
    const Matrix b = random_normal_element(rng, {1, 2}, {1, 1}, 4);
    const Matrix x = random_tangent(rng, b), y = random_tangent(rng, b);
    CHECK(std::abs(riemann_metric(b, x, y).hermitian -
                   std::conj(riemann_metric(b, y, x).hermitian)) < 1e-14);
    try {
      riemann_metric(diag({2, 5, 0}), E(1, 2, 3), E(1, 2, 3));
      FAIL("expected NotTangent");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotTangent);
    }
  }

  TEST_CASE("connection on polynomial fields") {
    Rng rng(27);
    auto coeffs = [&](Eigen::Index n) {
      std::vector<Matrix> c;
      for (int k = 0; k < 5; ++k) c.push_back(rng.gaussian(n, n));
      return c;
    };
    const VectorField zero{[](const Matrix& b) { return Matrix::Zero(b.rows(), b.cols()); }};

    // projection regime: a = λ p, selfadjoint fields
    const Matrix p = random_normal_element(rng, {1.5}, {2}, 4);
    const VectorField x = polynomial_field(coeffs(4), {}, true);
    const VectorField y = polynomial_field(coeffs(4), {}, true);
    const VectorField w = polynomial_field(coeffs(4), {}, true);
    CHECK(torsion_residual(x, y, p) <= 1e-4);
    CHECK(check_metric_compatibility(x, y, w, p) <= 1e-4);
    CHECK(check_hermitian_connection(x, y, p) <= 1e-8);
    CHECK(connection(x, zero, p).norm() == 0.0);
    CHECK(check_metric_compatibility(zero, y, w, p) <= 1e-12);

    // general point, complex fields: compatibility and the hermitian property
    const Matrix a = random_normal_element(rng, {Complex(1, 1), 3}, {1, 1}, 4);
    const VectorField xc = polynomial_field(coeffs(4));
    const VectorField yc = polynomial_field(coeffs(4));
    const VectorField wc = polynomial_field(coeffs(4));
    CHECK(check_metric_compatibility(xc, yc, wc, a) <= 1e-4);
    CHECK(check_hermitian_connection(xc, yc, a) <= 1e-8);
    CHECK(check_hermitian_connection(xc, zero, a) == 0.0);
    // connection values are tangent
    const Matrix nabla = connection(xc, yc, a);
    CHECK(is_tangent(a, nabla).tangent);
    // times_i
    CHECK(dist(times_i(yc)(a), testing::kI() * yc(a)) == 0.0);
  }

  TEST_CASE("local symmetry") {
    Rng rng(28);
    const Matrix a = random_normal_element(rng, {2, Complex(-1, 1)}, {1, 2}, 4);
    CHECK(dist(symmetry_at(a, a), a) < 1e-12);
    const Matrix z = rng.gaussian(4, 4);
    CHECK(dist(symmetry_at(a, symmetry_at(a, z)), z) < 1e-12);
    const Matrix u = random_tangent(rng, a, 0.8);
    CHECK(dist(symmetry_at(a, chart(a, u)), chart(a, -u)) < 1e-10);
  }

  TEST_CASE("triple_support agrees with the C*-support on normal points") {
    Rng rng(29);
    const Matrix a = random_normal_element(rng, {Complex(0, 2), 1}, {1, 1}, 4);
    const Matrix s = support(a).projection;
    const Matrix t = triple_support(a);
    CHECK(is_tripotent(t));
    const Matrix z = rng.gaussian(4, 4);
    CHECK(dist(half_projection(s, z), half_projection(t, z)) < 1e-10);
  }
}
