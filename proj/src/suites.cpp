#include "jordangeo/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "jordangeo/jbtriple.hpp"
#include "jordangeo/linalg.hpp"
#include "jordangeo/manifold.hpp"
#include "jordangeo/peirce.hpp"
#include "jordangeo/random.hpp"
#include "jordangeo/spectral.hpp"
#include "jordangeo/superop.hpp"
#include "jordangeo/triple.hpp"

namespace jordangeo {

void PropertyResult::record(double value) {
  if (count > 0 && std::isnan(worst)) {
    ++count;
    return;
  }
  if (count == 0 || std::isnan(value) ||
      (kind == Bound::at_most ? value > worst : value < worst)) {
    worst = value;
  }
  ++count;
}

bool PropertyResult::pass() const {
  if (count == 0) return true;
  if (std::isnan(worst)) return false;
  return kind == Bound::at_most ? worst <= limit : worst >= limit;
}

bool SuiteReport::pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.pass(); });
}

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

std::string SuiteReport::text() const {
  std::string out = "suite " + suite + " dim=" + std::to_string(dim) +
                    " trials=" + std::to_string(trials) +
                    " seed=" + std::to_string(seed) + "\n";
  for (const auto& w : warnings) out += "warning: " + w + "\n";
  std::string current;
  for (const auto& p : properties) {
    if (p.suite != current) {
      current = p.suite;
      out += "[" + current + "]\n";
    }
    char line[160];
    std::snprintf(line, sizeof line, "  %-34s worst=%-11s %s %-10s %s\n",
                  p.name.c_str(), p.count ? sci(p.worst).c_str() : "n/a",
                  p.kind == Bound::at_most ? "<=" : ">=", sci(p.limit).c_str(),
                  p.pass() ? "PASS" : "FAIL");
    out += line;
  }
  out += std::string("result: ") + (pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string SuiteReport::json() const {
  nlohmann::json doc;
  doc["suite"] = suite;
  doc["dim"] = dim;
  doc["trials"] = trials;
  doc["seed"] = seed;
  doc["pass"] = pass();
  doc["warnings"] = warnings;
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : properties) {
    nlohmann::json entry;
    entry["suite"] = p.suite;
    entry["name"] = p.name;
    entry["bound"] = p.kind == Bound::at_most ? "at_most" : "at_least";
    entry["limit"] = p.limit;
    entry["samples"] = p.count;
    if (p.count == 0 || std::isnan(p.worst)) {
      entry["worst"] = nullptr;
    } else {
      entry["worst"] = p.worst;
    }
    entry["pass"] = p.pass();
    props.push_back(std::move(entry));
  }
  doc["properties"] = std::move(props);
  return doc.dump(2) + "\n";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "axioms", "peirce", "spectral", "derivations", "manifold", "metric", "jb"};
  return names;
}

namespace {

constexpr double kPi = std::numbers::pi;

class Sheet {
 public:
  Sheet(SuiteReport& report, std::string suite)
      : report_(report), suite_(std::move(suite)) {}

  std::size_t add(std::string name, Bound kind, double limit) {
    PropertyResult p;
    p.suite = suite_;
    p.name = std::move(name);
    p.kind = kind;
    p.limit = limit;
    report_.properties.push_back(std::move(p));
    return report_.properties.size() - 1;
  }
  void record(std::size_t id, double value) { report_.properties[id].record(value); }
  void warn(std::string message) { report_.warnings.push_back(std::move(message)); }

 private:
  SuiteReport& report_;
  std::string suite_;
};

struct Component {
  std::vector<Complex> values;
  std::vector<Eigen::Index> ranks;
  Eigen::Index total_rank() const {
    Eigen::Index r = 0;
    for (auto k : ranks) r += k;
    return r;
  }
};

enum class Values { complex, real, positive };

// Distinct values with |λ| in [0.5, 2], pairwise at least 0.3 apart.
Component random_component(Rng& rng, int budget, int max_n, Values kind) {
  Component c;
  const int n = rng.uniform_int(1, std::min(max_n, budget));
  while (static_cast<int>(c.values.size()) < n) {
    const double mag = rng.uniform(0.5, 2.0);
    Complex v;
    switch (kind) {
      case Values::positive: v = mag; break;
      case Values::real: v = rng.uniform() < 0.5 ? -mag : mag; break;
      case Values::complex: v = std::polar(mag, rng.uniform(0.0, 2.0 * kPi)); break;
    }
    const bool separated = std::all_of(c.values.begin(), c.values.end(),
                                       [&](Complex w) { return std::abs(v - w) >= 0.3; });
    if (separated) c.values.push_back(v);
  }
  c.ranks.assign(static_cast<std::size_t>(n), 1);
  const int extra = rng.uniform_int(0, budget - n);
  for (int i = 0; i < extra; ++i) {
    ++c.ranks[static_cast<std::size_t>(rng.uniform_int(0, n - 1))];
  }
  return c;
}

std::vector<double> real_parts(const std::vector<Complex>& v) {
  std::vector<double> out;
  for (const Complex& z : v) out.push_back(z.real());
  return out;
}

Matrix unit(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
  Matrix m = Matrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

Matrix normalized(const Matrix& m, double norm) { return m * (norm / m.norm()); }

std::uint64_t draw_seed(Rng& rng) {
  return static_cast<std::uint64_t>(rng.uniform_int(0, std::numeric_limits<int>::max()));
}

bool same_signature(const ComponentSignature& x, const ComponentSignature& y,
                    const Tolerance& tol) {
  return x.matches(y, tol.cluster());
}

// ---------------------------------------------------------------------------

void suite_axioms(const SuiteOptions& o, Rng& rng, Sheet& sh) {
  const double t = o.tol.abs;
  const auto lin = sh.add("axiom1_symmetry_linearity", Bound::at_most, t);
  const auto com = sh.add("axiom2_commutator", Bound::at_most, t);
  const auto her = sh.add("axiom3_hermitian", Bound::at_most, t);
  const auto spe = sh.add("axiom3_min_spectrum", Bound::at_least, -t);
  const auto nrm = sh.add("axiom4_norm_identity", Bound::at_most, t);
  const auto der = sh.add("inner_derivation_is_derivation", Bound::at_most, t);
  const auto aut = sh.add("exp_derivation_is_automorphism", Bound::at_most, t);

  const double scale = 1.0 / o.dim;
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const Matrix a = rng.gaussian(o.dim, o.dim) * scale;
    const Matrix b = rng.gaussian(o.dim, o.dim) * scale;
    const Matrix c = rng.gaussian(o.dim, o.dim) * scale;
    const Matrix d = rng.gaussian(o.dim, o.dim) * scale;
    const AxiomReport r = check_jb_axioms(a, b, c, d);
    sh.record(lin, r.linearity);
    sh.record(com, r.commutator);
    sh.record(her, r.hermitian);
    sh.record(spe, r.min_spectrum);
    sh.record(nrm, r.norm_identity);

    const Derivation g = inner_derivation(a, b);
    const std::vector<Matrix> samples{c, d};
    sh.record(der, is_triple_derivation(g.op, samples, o.tol).residual);
    sh.record(aut, is_triple_automorphism(triple_exp(g, 1.0), samples, o.tol).residual);
  }
}

void suite_peirce(const SuiteOptions& o, Rng& rng, Sheet& sh) {
  const double t = o.tol.abs;
  const auto sum = sh.add("projections_sum_to_identity", Bound::at_most, t);
  const auto idem = sh.add("idempotence", Bound::at_most, t);
  const auto ann = sh.add("mutual_annihilation", Bound::at_most, t);
  const auto eig = sh.add("eigenvalue_relation", Bound::at_most, t);
  const auto rules = sh.add("multiplication_rules", Bound::at_most, t);
  const auto obz = sh.add("one_box_zero", Bound::at_most, t);
  const auto joint = sh.add("joint_projections_sum", Bound::at_most, t);
  const auto refl = sh.add("reflection_involutive", Bound::at_most, t);

  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const Eigen::Index rows = o.dim;
    const Eigen::Index cols = trial % 2 == 0 ? o.dim : o.dim + 1;
    const Eigen::Index rank = rng.uniform_int(1, static_cast<int>(std::min(rows, cols)));
    const Tripotent e(random_tripotent(rng, rows, cols, rank), o.tol);
    const PeirceDecomposition pd = peirce_projections(e);
    const Matrix id = identity(rows * cols);
    const std::array<const Matrix*, 3> k{&pd.p1.kernel(), &pd.p12.kernel(),
                                         &pd.p0.kernel()};
    const std::array<double, 3> lambda{1.0, 0.5, 0.0};
    const Matrix box_kernel = box(e.matrix(), e.matrix()).kernel();

    sh.record(sum, (*k[0] + *k[1] + *k[2] - id).norm());
    for (std::size_t i = 0; i < 3; ++i) {
      sh.record(idem, (*k[i] * *k[i] - *k[i]).norm());
      sh.record(eig, (box_kernel * *k[i] - lambda[i] * *k[i]).norm());
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j) sh.record(ann, (*k[i] * *k[j]).norm());
      }
    }
    const PeirceRuleReport pr = verify_peirce_rules(e, 1, draw_seed(rng));
    sh.record(rules, pr.rules);
    sh.record(obz, pr.one_box_zero);

    const Matrix s = peirce_reflection(e).kernel();
    sh.record(refl, (s * s - id).norm());

    const Matrix u = rng.haar_unitary(rows);
    const Matrix v = rng.haar_unitary(cols);
    const Eigen::Index r1 = rng.uniform_int(1, static_cast<int>(std::min(rows, cols)) - 1);
    const Eigen::Index r2 = rng.uniform_int(1, static_cast<int>(std::min(rows, cols) - r1));
    std::vector<Tripotent> family{
        Tripotent(u.leftCols(r1) * v.leftCols(r1).adjoint(), o.tol),
        Tripotent(u.middleCols(r1, r2) * v.middleCols(r1, r2).adjoint(), o.tol)};
    const JointPeirceDecomposition jp = joint_peirce(family, o.tol);
    Matrix total = Matrix::Zero(id.rows(), id.cols());
    for (const auto& [index, op] : jp.projections) total += op.kernel();
    sh.record(joint, (total - id).norm());
  }
}

void suite_spectral(const SuiteOptions& o, Rng& rng, Sheet& sh) {
  const double t = o.tol.abs;
  const auto round = sh.add("resolution_roundtrip", Bound::at_most, t);
  const auto proj = sh.add("projection_identities", Bound::at_most, t);
  const auto vand = sh.add("vandermonde_recovery", Bound::at_most, 1e-8);
  const auto alg = sh.add("algebraicity", Bound::at_most, 1e-8);
  const auto cov = sh.add("support_covariance", Bound::at_most, t);
  const auto sig = sh.add("signature_mismatches", Bound::at_most, 0.0);
  const auto conn = sh.add("unitary_connect", Bound::at_most, t);

  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const Component comp = random_component(rng, o.dim, 3, Values::complex);
    const Matrix a = random_normal_element(rng, comp.values, comp.ranks, o.dim);
    const SpectralResolution res = spectral_resolution(a, o.tol);

    sh.record(round, (res.reconstruct() - a).norm());
    double worst = 0.0;
    for (std::size_t i = 0; i < res.size(); ++i) {
      const Matrix& e = res.projections[i];
      worst = std::max({worst, (e * e - e).norm(), (e.adjoint() - e).norm()});
      for (std::size_t j = 0; j < res.size(); ++j) {
        if (i != j) worst = std::max(worst, (e * res.projections[j]).norm());
      }
    }
    sh.record(proj, worst);

    const auto from_powers = vandermonde_projections(a, res.values, o.tol);
    double vworst = 0.0;
    for (std::size_t i = 0; i < res.size(); ++i) {
      vworst = std::max(vworst, (from_powers[i] - res.projections[i]).norm());
    }
    sh.record(vand, vworst);
    sh.record(alg, (a * evaluate_polynomial(res.values, a)).norm());

    const Matrix u = rng.haar_unitary(o.dim);
    const Matrix b = u * a * u.adjoint();
    sh.record(cov, (u * support(a, o.tol).projection * u.adjoint() -
                    support(b, o.tol).projection).norm());
    const ComponentSignature requested{comp.values, comp.ranks};
    const bool ok = same_signature(signature(a, o.tol), requested, o.tol) &&
                    same_signature(signature(b, o.tol), requested, o.tol) &&
                    comp.total_rank() + res.kernel_rank == o.dim;
    sh.record(sig, ok ? 0.0 : 1.0);

    const Matrix w = rng.haar_unitary(o.dim);
    const Matrix target = w * a * w.adjoint();
    const Matrix c = unitary_connect(a, target, o.tol);
    sh.record(conn, std::max((c * a * c.adjoint() - target).norm(),
                             (c.adjoint() * c - identity(o.dim)).norm()));
  }
}

void suite_derivations(const SuiteOptions& o, Rng& rng, Sheet& sh) {
  const auto sa = sh.add("selfadjoint_leibniz", Bound::at_most, 1e-10);
  const auto nsa = sh.add("nonselfadjoint_leibniz", Bound::at_least, 1e-4);
  const auto tri = sh.add("triple_derivation", Bound::at_most, o.tol.abs);
  const auto star = sh.add("selfadjoint_exp_star_automorphism", Bound::at_most, o.tol.abs);

  const Shape shape{o.dim, o.dim};
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const Component comp = random_component(rng, o.dim - 1, 3, Values::complex);
    const Matrix a = random_normal_element(rng, comp.values, comp.ranks, o.dim);
    const Matrix s = support(a, o.tol).projection;
    const auto samples = sample_matrices(shape, 4, draw_seed(rng));

    const Matrix uh =
        normalized(half_projection(s, rng.hermitian(o.dim)), rng.uniform(0.2, 1.0));
    const Derivation gh = inner_derivation(s, uh);
    sh.record(sa, is_cstar_derivation(gh.op, samples, o.tol).residual);
    sh.record(tri, is_triple_derivation(gh.op, samples, o.tol).residual);
    const SuperOperator h = super_exp(gh.op);
    const Matrix& x = samples[0];
    const Matrix& y = samples[1];
    sh.record(star, std::max((h.apply(x * y) - h.apply(x) * h.apply(y)).norm(),
                             (h.apply(x.adjoint()) - h.apply(x).adjoint()).norm()));

    Matrix u;
    do {
      u = normalized(half_projection(s, rng.gaussian(o.dim, o.dim)),
                     rng.uniform(0.5, 1.0));
    } while ((u - u.adjoint()).norm() < 0.1);
    const Derivation g = inner_derivation(s, u);
    sh.record(nsa, is_cstar_derivation(g.op, samples, o.tol).residual);
    sh.record(tri, is_triple_derivation(g.op, samples, o.tol).residual);
  }
}

void suite_manifold(const SuiteOptions& o, Rng& rng, Sheet& sh) {
  const double t = o.tol.abs;
  const double h = 1e-4;
  const auto tdim = sh.add("tangent_dimension_mismatches", Bound::at_most, 0.0);
  const auto tdec = sh.add("tangent_decomposition", Bound::at_most, t);
  const auto phif = sh.add("phi_closed_form", Bound::at_most, 1e-10);
  const auto phii = sh.add("phi_inverse_roundtrip", Bound::at_most, 1e-10);
  const auto smin = sh.add("tangent_map_min_singular_margin", Bound::at_least, -1e-9);
  const auto orig = sh.add("geodesic_origin_exact", Bound::at_most, 0.0);
  const auto vel = sh.add("geodesic_velocity", Bound::at_most, 10.0 * h * h);
  const auto res = sh.add("geodesic_residual", Bound::at_most, 1e-6);
  const auto grp = sh.add("geodesic_group_property", Bound::at_most, t);
  const auto two = sh.add("geodesic_two_sided_oracle", Bound::at_most, t);
  const auto rot = sh.add("geodesic_rotation_closed_form", Bound::at_most, t);
  const auto sigc = sh.add("signature_preserved_selfadjoint", Bound::at_most, 0.0);
  const auto sigj = sh.add("jb_signature_preserved", Bound::at_most, 0.0);
  const auto cinv = sh.add("chart_inverse_roundtrip", Bound::at_most, 1e-8);
  const auto sym = sh.add("symmetry_parity", Bound::at_most, t);
  const auto inv = sh.add("aut_invariance_geodesic", Bound::at_most, t);
  const auto invs = sh.add("aut_invariance_signature", Bound::at_most, 0.0);

  const Eigen::Index d = o.dim;
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const Component comp = random_component(rng, o.dim - 1, 3, Values::complex);
    const Matrix a = random_normal_element(rng, comp.values, comp.ranks, d);
    const SpectralResolution sr = spectral_resolution(a, o.tol);
    const Matrix s = support(a, o.tol).projection;
    const Eigen::Index r = comp.total_rank();
    double min_value = std::abs(sr.values.front());
    for (const Complex& v : sr.values) min_value = std::min(min_value, std::abs(v));

    const auto basis = tangent_space_basis(a, o.tol);
    sh.record(tdim, static_cast<double>(basis.size()) == 2.0 * r * (d - r) ? 0.0 : 1.0);

    const Matrix u = normalized(half_projection(s, rng.gaussian(d, d)), 1.0);
    const TangentDecomposition dec = is_tangent(a, u, o.tol);
    Matrix recombined = Matrix::Zero(d, d);
    for (const auto& c : dec.components) recombined += c;
    sh.record(tdec, dec.tangent ? std::max(dec.orthogonality, (recombined - u).norm())
                                : std::numeric_limits<double>::infinity());

    std::vector<Matrix> v_parts;
    Matrix v = Matrix::Zero(d, d);
    for (const auto& e : sr.projections) {
      v_parts.push_back(e * rng.hermitian(d) * e / static_cast<double>(d));
      v += v_parts.back();
    }
    sh.record(phif, (phi(a, kI * v + u, o.tol) - phi_closed_form(sr, v_parts, u)).norm());
    const Matrix y = half_projection(s, rng.gaussian(d, d));
    sh.record(phii, (phi(a, phi_restricted_inverse(a, y, o.tol), o.tol) - y).norm());
    sh.record(smin, tangent_map_min_singular_value(a, o.tol) - 0.5 * min_value);

    const Geodesic g = make_geodesic(a, u, o.tol);
    sh.record(orig, (geodesic_point(g, 0.0) - a).cwiseAbs().maxCoeff());
    Matrix expected_velocity = Matrix::Zero(d, d);
    for (std::size_t k = 0; k < sr.size(); ++k) {
      expected_velocity += -0.5 * sr.values[k] * dec.components[k];
    }
    sh.record(vel, ((geodesic_point(g, h) - geodesic_point(g, -h)) / (2.0 * h) -
                    expected_velocity).norm());
    const double tt = trial % 4 == 0 ? (trial % 8 == 0 ? 2.0 : -2.0)
                                     : rng.uniform(-2.0, 2.0);
    sh.record(res, geodesic_residual(g, tt, h, o.tol));
    const Matrix gt = geodesic_point(g, tt);
    const double shift = rng.uniform(-1.0, 1.0);
    sh.record(grp, (super_exp(g.derivation.op * Complex(shift)).apply(gt) -
                    geodesic_point(g, tt + shift)).norm());
    const Matrix left = s * u.adjoint() - u * s;
    const Matrix right = u.adjoint() * s - s * u;
    sh.record(two, (mat_exp(left * (tt / 2.0)) * a * mat_exp(right * (tt / 2.0)) - gt).norm());

    const Matrix uh = normalized(half_projection(s, rng.hermitian(d)), 1.0);
    const Matrix gh = geodesic_point(make_geodesic(a, uh, o.tol), tt);
    sh.record(sigc, same_signature(signature(gh, o.tol), signature(a, o.tol), o.tol) ? 0.0 : 1.0);
    sh.record(sigj, same_signature(jb_signature(gt, o.tol), jb_signature(a, o.tol), o.tol)
                        ? 0.0 : 1.0);

    const Matrix small = u * (0.25 * 0.5 * min_value);
    const Matrix image = chart(a, small, o.tol);
    sh.record(cinv, (chart_inverse(a, image, o.tol) - small).norm());
    sh.record(sym, (symmetry_at(a, image, o.tol) - chart(a, -small, o.tol)).norm());

    const Matrix w = rng.haar_unitary(d);
    const Matrix aw = w * a * w.adjoint();
    const Geodesic gw = make_geodesic(aw, w * u * w.adjoint(), o.tol);
    sh.record(inv, (w * gt * w.adjoint() - geodesic_point(gw, tt)).norm());
    sh.record(invs, same_signature(signature(aw, o.tol), signature(a, o.tol), o.tol) ? 0.0 : 1.0);
  }

  if (o.trials > 0) {
    const Geodesic g = make_geodesic(unit(d, 0, 0), unit(d, 0, 1) + unit(d, 1, 0), o.tol);
    sh.record(rot, (geodesic_point(g, kPi) - unit(d, 1, 1)).norm());
  }
}

void suite_metric(const SuiteOptions& o, Rng& rng, Sheet& sh) {
  const double t = o.tol.abs;
  const auto tor = sh.add("torsion", Bound::at_most, 1e-4);
  const auto comp_p = sh.add("metric_compatibility", Bound::at_most, 1e-4);
  const auto comp_g = sh.add("metric_compatibility_general", Bound::at_most, 1e-4);
  const auto herm = sh.add("hermitian_connection", Bound::at_most, 1e-8);
  const auto pos = sh.add("metric_positive", Bound::at_least, 1e-12);
  const auto hsym = sh.add("metric_hermitian_symmetry", Bound::at_most, t);
  const auto ivar = sh.add("metric_i_invariance", Bound::at_most, t);
  const auto aut = sh.add("metric_aut_invariance", Bound::at_most, 1e-10);

  const Eigen::Index d = o.dim;
  auto coefficients = [&] {
    std::vector<Matrix> c;
    for (int i = 0; i < 5; ++i) c.push_back(rng.gaussian(d, d) / static_cast<double>(d));
    return c;
  };

  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    // Projection-manifold regime: a = λ p, selfadjoint-valued fields.
    const double lambda = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
    const Eigen::Index rank = rng.uniform_int(1, o.dim - 1);
    const Matrix p = random_normal_element(rng, {Complex(lambda)}, {rank}, d);
    const VectorField x = polynomial_field(coefficients(), o.tol, true);
    const VectorField y = polynomial_field(coefficients(), o.tol, true);
    const VectorField w = polynomial_field(coefficients(), o.tol, true);
    sh.record(tor, torsion_residual(x, y, p, o.tol));
    sh.record(comp_p, check_metric_compatibility(x, y, w, p, o.tol));
    sh.record(herm, check_hermitian_connection(x, y, p, o.tol));

    // General point and complex fields.
    const Component comp = random_component(rng, o.dim - 1, 3, Values::complex);
    const Matrix a = random_normal_element(rng, comp.values, comp.ranks, d);
    const VectorField xg = polynomial_field(coefficients(), o.tol);
    const VectorField yg = polynomial_field(coefficients(), o.tol);
    const VectorField wg = polynomial_field(coefficients(), o.tol);
    sh.record(comp_g, check_metric_compatibility(xg, yg, wg, a, o.tol));
    sh.record(herm, check_hermitian_connection(xg, yg, a, o.tol));

    const Matrix s = support(a, o.tol).projection;
    const Matrix u = half_projection(s, rng.gaussian(d, d));
    const Matrix v = half_projection(s, rng.gaussian(d, d));
    const MetricValue uv = riemann_metric(a, u, v, o.tol);
    sh.record(pos, riemann_metric(a, u, u, o.tol).riemannian / u.squaredNorm());
    sh.record(hsym, std::abs(uv.hermitian - std::conj(riemann_metric(a, v, u, o.tol).hermitian)));
    sh.record(ivar, std::abs(riemann_metric(a, kI * u, kI * v, o.tol).hermitian - uv.hermitian));
    const Matrix q = rng.haar_unitary(d);
    const MetricValue moved = riemann_metric(q * a * q.adjoint(), q * u * q.adjoint(),
                                             q * v * q.adjoint(), o.tol);
    sh.record(aut, std::abs(moved.hermitian - uv.hermitian));
  }
}

void suite_jb(const SuiteOptions& o, Rng& rng, Sheet& sh) {
  const double t = o.tol.abs;
  const auto round = sh.add("jb_roundtrip", Bound::at_most, t);
  const auto orth = sh.add("tripotent_orthogonality", Bound::at_most, t);
  const auto sig = sh.add("signature_mismatches", Bound::at_most, 0.0);
  const auto cons = sh.add("cstar_consistency", Bound::at_most, t);
  const auto odd = sh.add("odd_power_identity", Bound::at_most, 1e-8);
  const auto conn = sh.add("connect_type1", Bound::at_most, t);
  const auto unit_res = sh.add("connect_unitarity", Bound::at_most, t);
  const auto tdim = sh.add("extended_tangent_dimension_mismatches", Bound::at_most, 0.0);
  const auto agree = sh.add("neher_dual_disagreements", Bound::at_most, 0.0);
  const auto classify = sh.add("neher_misclassified_pairs", Bound::at_most, 0.0);
  const auto phase = sh.add("pure_phase_breaks_equivalence", Bound::at_most, 0.0);
  const auto half = sh.add("half_part_keeps_equivalence", Bound::at_most, 0.0);
  const auto csig = sh.add("chart_ext_signature_mismatches", Bound::at_most, 0.0);
  const auto fact = sh.add("fiber_factorization", Bound::at_most, 1e-8);
  const auto circ = sh.add("fiber_unit_circle", Bound::at_most, 1e-8);
  const auto memb = sh.add("fiber_peirce_membership", Bound::at_most, t);
  const auto fequiv = sh.add("fiber_leaves_class", Bound::at_most, 0.0);
  const auto bres = sh.add("base_geodesic_residual", Bound::at_most, 1e-6);
  const auto bsym = sh.add("base_symmetry_parity", Bound::at_most, t);

  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const Eigen::Index rows = rng.uniform_int(2, o.dim);
    const Eigen::Index cols = rng.uniform_int(2, o.dim + 1);
    const int budget = static_cast<int>(std::min(rows, cols));
    const Component comp = random_component(rng, budget, 3, Values::positive);
    const std::vector<double> values = real_parts(comp.values);
    const Matrix a = random_jb_element(rng, values, comp.ranks, rows, cols);
    const TripotentResolution res = jb_spectral(a, o.tol);

    sh.record(round, (res.reconstruct() - a).norm());
    double worst = 0.0;
    for (std::size_t i = 0; i < res.size(); ++i) {
      const Matrix& e = res.tripotents[i];
      worst = std::max(worst, (triple_product(e, e, e) - e).norm());
      for (std::size_t j = 0; j < res.size(); ++j) {
        if (i != j) worst = std::max(worst, box(e, res.tripotents[j]).kernel().norm());
      }
    }
    sh.record(orth, worst);
    sh.record(sig, same_signature(jb_signature(a, o.tol),
                                  ComponentSignature{comp.values, comp.ranks}, o.tol)
                       ? 0.0 : 1.0);
    sh.record(odd, odd_power_check(res, 1 + static_cast<int>(trial % 3)));

    const Matrix b = random_jb_element(rng, values, comp.ranks, rows, cols);
    const auto [u_right, v_left] = connect_type1(a, b, o.tol);
    sh.record(conn, (v_left * a * u_right - b).norm());
    sh.record(unit_res, std::max((u_right.adjoint() * u_right - identity(cols)).norm(),
                                 (v_left.adjoint() * v_left - identity(rows)).norm()));

    const Matrix s = res.support();
    const Eigen::Index r = comp.total_rank();
    Eigen::Index a_dim = 0;
    for (auto rk : comp.ranks) a_dim += rk * rk;
    const auto basis = extended_tangent_basis(a, o.tol);
    sh.record(tdim, static_cast<Eigen::Index>(basis.size()) ==
                            a_dim + 2 * r * (rows + cols - 2 * r)
                        ? 0.0 : 1.0);

    // Neher pairs: a phase-rotated copy and a genuinely moved tripotent.
    // Every unitary is equivalent to every other, so keep Z_1/2(e) nonzero.
    const Eigen::Index q = rng.uniform_int(1, rows == cols ? budget - 1 : budget);
    const Matrix e = random_tripotent(rng, rows, cols, q);
    const TripotentResolution er = jb_spectral(e, o.tol);
    const Matrix f = er.left[0] * rng.haar_unitary(q) * er.right[0].adjoint();
    const NeherReport same = neher_report(e, f, o.tol);
    const Matrix moved_dir = normalized(half_projection(e, rng.gaussian(rows, cols)), 0.3);
    const Matrix moved = super_exp(inner_derivation(e, moved_dir).op).apply(e);
    const NeherReport other = neher_report(e, moved, o.tol);
    sh.record(agree, (same.agree() ? 0.0 : 1.0) + (other.agree() ? 0.0 : 1.0));
    sh.record(classify, (same.box_equivalent ? 0.0 : 1.0) + (other.box_equivalent ? 1.0 : 0.0));

    // Fiber directions v = Σ v_k with v_k selfadjoint in Z_1(e_k).
    Matrix v = Matrix::Zero(rows, cols);
    for (std::size_t k = 0; k < res.size(); ++k) {
      const Eigen::Index rk = res.ranks[k];
      v += res.left[k] * (rng.hermitian(rk) / static_cast<double>(rk)) *
           res.right[k].adjoint();
    }
    const Matrix along_fiber = chart_ext(a, kI * v, o.tol);
    sh.record(phase, equivalent_elements(a, along_fiber, o.tol) ? 0.0 : 1.0);
    sh.record(csig, same_signature(jb_signature(along_fiber, o.tol), jb_signature(a, o.tol),
                                   o.tol) ? 0.0 : 1.0);
    const Matrix hp = half_projection(s, rng.gaussian(rows, cols));
    if (hp.norm() > 1e-6) {
      const Matrix uh = normalized(hp, 0.2);
      const Matrix off_fiber = chart_ext(a, uh, o.tol);
      sh.record(half, equivalent_elements(a, off_fiber, o.tol) ? 1.0 : 0.0);
      sh.record(csig, same_signature(jb_signature(off_fiber, o.tol), jb_signature(a, o.tol),
                                     o.tol) ? 0.0 : 1.0);

      const Matrix ub = normalized(hp, 1.0);
      const Geodesic g = base_geodesic(a, ub, o.tol);
      sh.record(bres, base_geodesic_residual(g, rng.uniform(-2.0, 2.0), 1e-4, o.tol));
      const Matrix plus = chart_ext(a, 0.5 * ub, o.tol);
      const Matrix reflected = plus - 2.0 * half_projection(s, plus);
      sh.record(bsym, (reflected - chart_ext(a, -0.5 * ub, o.tol)).norm());
    }

    const FiberSample fs = fiber_sample(a, v, rng.uniform(-5.0, 5.0), o.tol);
    sh.record(fact, fs.factorization);
    sh.record(circ, fs.unit_circle);
    sh.record(memb, fs.membership);
    sh.record(fequiv, equivalent_elements(a, fs.point, o.tol) ? 0.0 : 1.0);

    // Square positive normal input: both spectral notions coincide.
    const Component pc = random_component(rng, o.dim, 3, Values::positive);
    const Matrix pa = random_normal_element(rng, pc.values, pc.ranks, o.dim);
    const TripotentResolution jr = jb_spectral(pa, o.tol);
    const SpectralResolution cr = spectral_resolution(pa, o.tol);
    double cworst = jr.size() == cr.size() ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < std::min(jr.size(), cr.size()); ++k) {
      cworst = std::max({cworst, std::abs(jr.values[k] - cr.values[k]),
                         (jr.tripotents[k] - cr.projections[k]).norm()});
    }
    sh.record(cons, cworst);
  }
}

using SuiteFn = std::function<void(const SuiteOptions&, Rng&, Sheet&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"axioms", suite_axioms},     {"peirce", suite_peirce},
      {"spectral", suite_spectral}, {"derivations", suite_derivations},
      {"manifold", suite_manifold}, {"metric", suite_metric},
      {"jb", suite_jb}};
  return table;
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  options.tol.validate();
  if (options.dim < 2 || options.dim > 8) {
    throw Error(ErrorKind::InvalidArgument, "dimension must lie in [2, 8]");
  }
  const bool all = options.suite == "all";
  const auto& table = registry();
  if (!all && std::none_of(table.begin(), table.end(),
                           [&](const auto& e) { return e.first == options.suite; })) {
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + options.suite + "'");
  }

  SuiteReport report;
  report.suite = options.suite;
  report.dim = options.dim;
  report.trials = options.trials;
  report.seed = options.seed;
  if (options.trials == 0) {
    report.warnings.push_back("--trials 0: no samples drawn, the pass is vacuous");
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& [name, fn] = table[i];
    if (!all && name != options.suite) continue;
    // Each suite draws from its own stream so `all` matches the single runs.
    Rng rng(options.seed * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL * (i + 1));
    Sheet sheet(report, name);
    try {
      fn(options, rng, sheet);
    } catch (const Error& e) {
      PropertyResult failure;
      failure.suite = name;
      failure.name = "unexpected_error";
      failure.limit = 0.0;
      failure.record(1.0);
      report.properties.push_back(failure);
      report.warnings.push_back(name + ": " + std::string(to_string(e.kind())) + ": " +
                                e.what());
    }
  }
  return report;
}

}  // namespace jordangeo
