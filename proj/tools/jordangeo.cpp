// Command-line front end: jordangeo <subcommand> [options].
//
// Exit codes: 0 success, 1 domain failure, 2 usage or I/O error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jordangeo/io.hpp"
#include "jordangeo/jbtriple.hpp"
#include "jordangeo/linalg.hpp"
#include "jordangeo/manifold.hpp"
#include "jordangeo/peirce.hpp"
#include "jordangeo/random.hpp"
#include "jordangeo/spectral.hpp"
#include "jordangeo/suites.hpp"
#include "jordangeo/triple.hpp"

namespace jg = jordangeo;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A verification ran but did not pass; reported with exit code 1.
struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<double> tol;
  std::uint64_t seed = 0;
  bool json = false;
};

jg::Tolerance make_tolerance(const Globals& g) {
  jg::Tolerance tol;
  std::optional<double> value = g.tol;
  if (!value) {
    if (const char* env = std::getenv("JORDAN_GEO_TOL"); env && *env) {
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(env, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != std::string(env).size()) {
        throw UsageError(std::string("JORDAN_GEO_TOL is not a number: ") + env);
      }
      value = x;
    }
  }
  if (value) {
    if (!std::isfinite(*value) || *value <= 0.0) {
      throw UsageError("tolerance must be a positive finite number");
    }
    tol.abs = *value;
    tol.rel = *value;
  }
  return tol;
}

std::string num(double x) { return jg::format_double(x); }

std::string complex_text(jg::Complex z) {
  const double eps = 1e-12 * std::abs(z);
  if (std::abs(z.imag()) <= eps) z.imag(0.0);
  if (std::abs(z.real()) <= eps) z.real(0.0);
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  }
  return buf;
}

json matrix_json(const jg::Matrix& m) { return json::parse(jg::serialize_matrix(m)); }

json complex_json(jg::Complex z) { return json::array({z.real(), z.imag()}); }

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw jg::IoError("cannot write " + path);
  out << text;
  if (!out) throw jg::IoError("write failed for " + path);
}

void require_nonempty(const jg::Matrix& m, const std::string& what) {
  if (m.size() == 0) throw UsageError(what + ": empty matrix");
}

jg::Matrix load(const std::string& path) {
  jg::Matrix m = jg::read_matrix(path);
  require_nonempty(m, path);
  return m;
}

void require_square_file(const jg::Matrix& m, const std::string& path) {
  if (m.rows() != m.cols()) {
    throw UsageError(path + ": cstar mode needs a square matrix");
  }
}

void require_same_shape(const jg::Matrix& a, const jg::Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw UsageError("input matrices have different shapes");
  }
}

// "2", "-1.5", "3i", "1+2i", "1e-3-2.5i".
jg::Complex parse_scalar(const std::string& s) {
  auto parse_real = [&](const std::string& t) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size() || !std::isfinite(x)) {
      throw UsageError("not a number: '" + s + "'");
    }
    return x;
  };
  if (s.empty()) throw UsageError("empty spectral value");
  if (s.back() != 'i') return parse_real(s);
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, parse_real(body)};
  }
  const std::string im = body.substr(split);
  const double imag = im == "+" ? 1.0 : im == "-" ? -1.0 : parse_real(im);
  return {parse_real(body.substr(0, split)), imag};
}

struct ComponentRequest {
  std::vector<jg::Complex> values;
  std::vector<Eigen::Index> ranks;
};

ComponentRequest parse_component(const std::string& spec, const jg::Tolerance& tol) {
  ComponentRequest out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) {
      throw UsageError("component entries must look like value:rank, got '" + item + "'");
    }
    const jg::Complex value = parse_scalar(item.substr(0, colon));
    const std::string rank_text = item.substr(colon + 1);
    if (rank_text.empty() ||
        rank_text.find_first_not_of("0123456789") != std::string::npos ||
        rank_text.size() > 6) {
      throw UsageError("rank must be a positive integer, got '" + rank_text + "'");
    }
    const long rank = std::stol(rank_text);
    if (rank < 1) throw UsageError("rank must be a positive integer");
    if (std::abs(value) <= tol.cluster()) throw UsageError("spectral values must be nonzero");
    for (const jg::Complex& v : out.values) {
      if (std::abs(v - value) <= tol.cluster()) {
        throw UsageError("spectral values must be distinct");
      }
    }
    out.values.push_back(value);
    out.ranks.push_back(rank);
  }
  if (out.values.empty()) throw UsageError("empty component specification");
  return out;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const jg::Complex z = parse_scalar(item);
    if (z.imag() != 0.0) throw UsageError("expected a real number, got '" + item + "'");
    out.push_back(z.real());
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

// ---------------------------------------------------------------------------

struct SpectralArgs {
  std::string file;
  std::string mode = "cstar";
};

int cmd_spectral(const SpectralArgs& args, const Globals& g) {
  const jg::Tolerance tol = make_tolerance(g);
  const jg::Matrix a = load(args.file);
  json doc;
  doc["mode"] = args.mode;
  std::ostringstream text;
  if (args.mode == "cstar") {
    require_square_file(a, args.file);
    const jg::SpectralResolution res = jg::spectral_resolution(a, tol);
    const jg::ComponentSignature sig = jg::signature_of(res);
    json values = json::array();
    json ranks = json::array();
    json projections = json::array();
    Eigen::Index support_rank = 0;
    for (std::size_t k = 0; k < res.size(); ++k) {
      values.push_back(complex_json(res.values[k]));
      ranks.push_back(res.ranks[k]);
      projections.push_back(matrix_json(res.projections[k]));
      support_rank += res.ranks[k];
    }
    doc["values"] = values;
    doc["ranks"] = ranks;
    doc["kernel_rank"] = res.kernel_rank;
    doc["support_rank"] = support_rank;
    doc["signature"] = sig.to_string();
    doc["projections"] = projections;
    text << "mode: cstar\n";
    for (std::size_t k = 0; k < res.size(); ++k) {
      text << "  lambda_" << k + 1 << " = " << complex_text(res.values[k])
           << "  rank " << res.ranks[k] << "\n";
    }
    text << "kernel rank: " << res.kernel_rank << "\n"
         << "support rank: " << support_rank << "\n"
         << "signature: " << sig.to_string() << "\n";
  } else {
    const jg::TripotentResolution res = jg::jb_spectral(a, tol);
    const jg::ComponentSignature sig = jg::jb_signature(a, tol);
    json tripotents = json::array();
    Eigen::Index support_rank = 0;
    for (std::size_t k = 0; k < res.size(); ++k) {
      tripotents.push_back(matrix_json(res.tripotents[k]));
      support_rank += res.ranks[k];
    }
    doc["values"] = res.values;
    doc["ranks"] = res.ranks;
    doc["support_rank"] = support_rank;
    doc["signature"] = sig.to_string();
    doc["tripotents"] = tripotents;
    text << "mode: jb\n";
    for (std::size_t k = 0; k < res.size(); ++k) {
      text << "  lambda_" << k + 1 << " = " << complex_text(res.values[k])
           << "  rank " << res.ranks[k] << "\n";
    }
    text << "support rank: " << support_rank << "\n"
         << "signature: " << sig.to_string() << "\n";
  }
  std::cout << (g.json ? doc.dump(2) + "\n" : text.str());
  return kOk;
}

struct GeodesicArgs {
  std::string a_file;
  std::string u_file;
  double t0 = 0.0;
  double t1 = 1.0;
  int steps = 64;
  double fd_step = 1e-4;
  std::string mode = "cstar";
  std::string out;
};

int cmd_geodesic(const GeodesicArgs& args, const Globals& g) {
  const jg::Tolerance tol = make_tolerance(g);
  if (args.steps < 1 || args.steps > 1000000) {
    throw UsageError("--steps must lie in [1, 1000000]");
  }
  if (!std::isfinite(args.t0) || !std::isfinite(args.t1)) {
    throw UsageError("--t0 and --t1 must be finite");
  }
  if (!(args.fd_step > 0.0) || !std::isfinite(args.fd_step)) {
    throw UsageError("--fd-step must be positive");
  }
  const jg::Matrix a = load(args.a_file);
  const jg::Matrix u = load(args.u_file);
  require_same_shape(a, u);
  const bool jb = args.mode == "jb";
  if (!jb) require_square_file(a, args.a_file);
  const jg::Geodesic geo = jb ? jg::base_geodesic(a, u, tol) : jg::make_geodesic(a, u, tol);

  std::string csv = jg::trajectory_header(a.rows(), a.cols()) + "\n";
  json points = json::array();
  json ts = json::array();
  json residuals = json::array();
  double worst = 0.0;
  for (int i = 0; i <= args.steps; ++i) {
    const double t = i == args.steps ? args.t1
                                     : args.t0 + (args.t1 - args.t0) * i / args.steps;
    const jg::Matrix z = jg::geodesic_point(geo, t);
    const double r = jb ? jg::base_geodesic_residual(geo, t, args.fd_step, tol)
                        : jg::geodesic_residual(geo, t, args.fd_step, tol);
    worst = std::max(worst, r);
    csv += jg::trajectory_row(t, z, r) + "\n";
    ts.push_back(t);
    points.push_back(matrix_json(z));
    residuals.push_back(r);
  }
  if (g.json) {
    json doc;
    doc["t"] = ts;
    doc["points"] = points;
    doc["residual"] = residuals;
    doc["max_residual"] = worst;
    emit(doc.dump(2) + "\n", args.out);
  } else {
    emit(csv, args.out);
  }
  if (worst > 1e-6) {
    throw DomainFailure("geodesic residual " + num(worst) + " exceeds 1e-6");
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  int dim = 3;
  long long trials = 100;
};

int cmd_verify(const VerifyArgs& args, const Globals& g) {
  if (args.trials < 0) throw UsageError("--trials must be nonnegative");
  if (args.dim < 2 || args.dim > 8) throw UsageError("--dim must lie in [2, 8]");
  jg::SuiteOptions options;
  options.suite = args.suite;
  options.dim = args.dim;
  options.trials = static_cast<std::size_t>(args.trials);
  options.seed = g.seed;
  options.tol = make_tolerance(g);
  const jg::SuiteReport report = jg::run_suite(options);
  if (g.json) {
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  }
  std::cout << (g.json ? report.json() : report.text());
  return report.pass() ? kOk : kDomain;
}

struct ConnectArgs {
  std::string a_file;
  std::string b_file;
  std::string mode = "cstar";
  std::string out;
  std::string out_v;
};

int cmd_connect(const ConnectArgs& args, const Globals& g) {
  const jg::Tolerance tol = make_tolerance(g);
  const jg::Matrix a = load(args.a_file);
  const jg::Matrix b = load(args.b_file);
  require_same_shape(a, b);
  json doc;
  doc["mode"] = args.mode;
  std::ostringstream text;
  double residual = 0.0;
  if (args.mode == "cstar") {
    require_square_file(a, args.a_file);
    const jg::Matrix u = jg::unitary_connect(a, b, tol);
    residual = (u * a * u.adjoint() - b).norm();
    doc["U"] = matrix_json(u);
    doc["residual"] = residual;
    text << "residual ||U a U* - b|| = " << num(residual) << "\n";
    if (!args.out.empty()) {
      jg::write_matrix(args.out, u);
      text << "U written to " << args.out << "\n";
    } else {
      text << "U = " << jg::serialize_matrix(u);
    }
  } else {
    const auto [u, v] = jg::connect_type1(a, b, tol);
    residual = (v * a * u - b).norm();
    doc["U"] = matrix_json(u);
    doc["V"] = matrix_json(v);
    doc["residual"] = residual;
    text << "residual ||V a U - b|| = " << num(residual) << "\n";
    if (!args.out.empty()) {
      jg::write_matrix(args.out, u);
      text << "U written to " << args.out << "\n";
    } else {
      text << "U = " << jg::serialize_matrix(u);
    }
    if (!args.out_v.empty()) {
      jg::write_matrix(args.out_v, v);
      text << "V written to " << args.out_v << "\n";
    } else {
      text << "V = " << jg::serialize_matrix(v);
    }
  }
  std::cout << (g.json ? doc.dump(2) + "\n" : text.str());
  if (!tol.accepts(residual, std::max(1.0, b.norm()))) {
    throw DomainFailure("connecting residual " + num(residual) + " exceeds tolerance");
  }
  return kOk;
}

struct RandomArgs {
  std::string component;
  int dim = 0;
  int rows = 0;
  int cols = 0;
  std::string mode = "cstar";
  std::string out;
};

int cmd_random(const RandomArgs& args, const Globals& g) {
  const jg::Tolerance tol = make_tolerance(g);
  const ComponentRequest req = parse_component(args.component, tol);
  Eigen::Index total = 0;
  for (auto r : req.ranks) total += r;
  jg::Rng rng(g.seed);
  jg::Matrix a;
  if (args.mode == "cstar") {
    if (args.dim < 1 || args.dim > 256) throw UsageError("--dim must lie in [1, 256]");
    if (total > args.dim) {
      throw UsageError("sum of ranks " + std::to_string(total) + " exceeds --dim " +
                       std::to_string(args.dim));
    }
    a = jg::random_normal_element(rng, req.values, req.ranks, args.dim);
  } else {
    const int rows = args.rows > 0 ? args.rows : args.dim;
    const int cols = args.cols > 0 ? args.cols : args.dim;
    if (rows < 1 || cols < 1 || rows > 256 || cols > 256) {
      throw UsageError("jb mode needs --rows/--cols (or --dim) in [1, 256]");
    }
    if (total > std::min(rows, cols)) {
      throw UsageError("sum of ranks exceeds min(rows, cols)");
    }
    std::vector<double> values;
    for (const jg::Complex& v : req.values) {
      if (v.imag() != 0.0 || v.real() <= 0.0) {
        throw UsageError("jb mode needs positive real values");
      }
      values.push_back(v.real());
    }
    a = jg::random_jb_element(rng, values, req.ranks, rows, cols);
  }
  emit(jg::serialize_matrix(a), args.out);
  return kOk;
}

struct FiberArgs {
  std::string a_file;
  std::string v_file;
  std::string t_list = "0";
  std::string out;
};

int cmd_fiber(const FiberArgs& args, const Globals& g) {
  const jg::Tolerance tol = make_tolerance(g);
  const std::vector<double> ts = parse_list(args.t_list);
  for (double t : ts) {
    if (!std::isfinite(t)) throw UsageError("--t-list entries must be finite");
  }
  const jg::Matrix a = load(args.a_file);
  const jg::Matrix v = load(args.v_file);
  require_same_shape(a, v);

  std::string csv = "t";
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    csv += ",z_" + std::to_string(k) + "_re,z_" + std::to_string(k) + "_im";
  }
  csv += ",factorization,unit_circle,equivalent\n";
  json rows = json::array();
  bool ok = true;
  for (double t : ts) {
    const jg::FiberSample fs = jg::fiber_sample(a, v, t, tol);
    const bool equivalent = jg::equivalent_elements(a, fs.point, tol);
    const bool certified = equivalent && fs.factorization <= 1e-8 && fs.unit_circle <= 1e-8;
    ok = ok && certified;
    std::string line = jg::trajectory_row(t, fs.point, fs.factorization);
    csv += line + "," + num(fs.unit_circle) + "," + (equivalent ? "1" : "0") + "\n";
    json row;
    row["t"] = t;
    row["point"] = matrix_json(fs.point);
    row["factorization"] = fs.factorization;
    row["unit_circle"] = fs.unit_circle;
    row["equivalent"] = equivalent;
    rows.push_back(row);
  }
  emit(g.json ? rows.dump(2) + "\n" : csv, args.out);
  if (!ok) throw DomainFailure("fiber certification failed");
  return kOk;
}

struct PeirceArgs {
  std::string e_file;
  std::string z_file;
};

int cmd_peirce(const PeirceArgs& args, const Globals& g) {
  const jg::Tolerance tol = make_tolerance(g);
  const jg::Matrix m = load(args.e_file);
  const jg::Tripotent e(m, tol);
  const jg::PeirceDecomposition pd = jg::peirce_projections(e);
  json doc;
  doc["rank"] = e.rank();
  doc["dim_one"] = pd.basis1.size();
  doc["dim_half"] = pd.basis12.size();
  doc["dim_zero"] = pd.basis0.size();
  std::ostringstream text;
  text << "tripotent rank: " << e.rank() << "\n"
       << "complex dimensions: Z_1 = " << pd.basis1.size()
       << ", Z_1/2 = " << pd.basis12.size() << ", Z_0 = " << pd.basis0.size() << "\n";
  if (!args.z_file.empty()) {
    const jg::Matrix z = load(args.z_file);
    require_same_shape(m, z);
    const jg::Matrix z1 = pd.p1.apply(z);
    const jg::Matrix z12 = pd.p12.apply(z);
    const jg::Matrix z0 = pd.p0.apply(z);
    doc["one"] = matrix_json(z1);
    doc["half"] = matrix_json(z12);
    doc["zero"] = matrix_json(z0);
    const double gap = (z1 + z12 + z0 - z).norm();
    doc["reconstruction"] = gap;
    text << "||P_1 z|| = " << num(z1.norm()) << "\n"
         << "||P_1/2 z|| = " << num(z12.norm()) << "\n"
         << "||P_0 z|| = " << num(z0.norm()) << "\n"
         << "||P_1 z + P_1/2 z + P_0 z - z|| = " << num(gap) << "\n";
  }
  std::cout << (g.json ? doc.dump(2) + "\n" : text.str());
  return kOk;
}

struct TangentArgs {
  std::string a_file;
  std::string u_file;
  std::string mode = "cstar";
};

int cmd_tangent(const TangentArgs& args, const Globals& g) {
  const jg::Tolerance tol = make_tolerance(g);
  const jg::Matrix a = load(args.a_file);
  std::optional<jg::Matrix> u;
  if (!args.u_file.empty()) {
    u = load(args.u_file);
    require_same_shape(a, *u);
  }
  json doc;
  doc["mode"] = args.mode;
  std::ostringstream text;
  bool tangent = true;
  if (args.mode == "cstar") {
    require_square_file(a, args.a_file);
    const auto basis = jg::tangent_space_basis(a, tol);
    const double smin = jg::tangent_map_min_singular_value(a, tol);
    doc["support_rank"] = jg::support(a, tol).rank;
    doc["complex_dimension"] = basis.size();
    doc["phi_min_singular_value"] = smin;
    text << "support rank: " << jg::support(a, tol).rank << "\n"
         << "tangent space Z_1/2(supp a), complex dimension: " << basis.size() << "\n"
         << "min singular value of u -> g(supp a, u) a: " << num(smin) << "\n";
    if (u) {
      const jg::TangentDecomposition dec = jg::is_tangent(a, *u, tol);
      tangent = dec.tangent;
      doc["tangent"] = dec.tangent;
      doc["residual"] = dec.residual;
      doc["orthogonality"] = dec.orthogonality;
      text << "tangent: " << (dec.tangent ? "yes" : "no") << " (residual "
           << num(dec.residual) << ")\n";
      if (dec.tangent) {
        const jg::Matrix p = jg::phi(a, *u, tol);
        doc["phi"] = matrix_json(p);
        doc["phi_inverse"] = matrix_json(jg::phi_restricted_inverse(a, *u, tol));
        text << "component orthogonality: " << num(dec.orthogonality) << "\n"
             << "phi_a(u) = " << jg::serialize_matrix(p);
      }
    }
  } else {
    const auto basis = jg::extended_tangent_basis(a, tol);
    doc["real_dimension"] = basis.size();
    text << "extended tangent space, real dimension: " << basis.size() << "\n";
    if (u) {
      const jg::ExtendedTangentCheck check = jg::is_extended_tangent(a, *u, tol);
      tangent = check.tangent;
      doc["tangent"] = check.tangent;
      doc["residual"] = check.residual;
      text << "tangent: " << (check.tangent ? "yes" : "no") << " (residual "
           << num(check.residual) << ")\n";
    }
  }
  std::cout << (g.json ? doc.dump(2) + "\n" : text.str());
  if (!tangent) throw DomainFailure("direction is not tangent at a");
  return kOk;
}

int exit_code_for(jg::ErrorKind kind) {
  switch (kind) {
    case jg::ErrorKind::InvalidArgument:
    case jg::ErrorKind::ShapeMismatch:
    case jg::ErrorKind::NotSquare:
    case jg::ErrorKind::NonFinite:
      return kUsage;
    default:
      return kDomain;
  }
}

std::string describe(const jg::Error& e) {
  switch (e.kind()) {
    case jg::ErrorKind::NotNormal: return std::string("not normal: ") + e.what();
    case jg::ErrorKind::NotTangent: return std::string("not tangent: ") + e.what();
    case jg::ErrorKind::DifferentComponents:
      return std::string("different components: ") + e.what();
    default: return std::string(jg::to_string(e.kind())) + ": " + e.what();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of normal algebraic elements in matrix JB*-triples"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  double tol_value = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_value, "absolute and relative tolerance "
                                                     "(default 1e-9, or JORDAN_GEO_TOL)");
  app.add_option("--seed", globals.seed, "64-bit random seed")->capture_default_str();
  app.add_flag("--json", globals.json, "machine-readable output");

  const std::vector<std::string> modes{"cstar", "jb"};

  SpectralArgs spectral;
  auto* sp = app.add_subcommand("spectral", "spectral resolution and component signature");
  sp->add_option("file", spectral.file, "matrix JSON file")->required();
  sp->add_option("--mode", spectral.mode)->check(CLI::IsMember(modes))->capture_default_str();

  GeodesicArgs geodesic;
  auto* ge = app.add_subcommand("geodesic", "CSV trajectory of t -> exp(t g(supp a, u)) a");
  ge->add_option("a", geodesic.a_file, "base point")->required();
  ge->add_option("u", geodesic.u_file, "tangent direction")->required();
  ge->add_option("--t0", geodesic.t0)->capture_default_str();
  ge->add_option("--t1", geodesic.t1)->capture_default_str();
  ge->add_option("--steps", geodesic.steps, "number of intervals")->capture_default_str();
  ge->add_option("--fd-step", geodesic.fd_step, "residual difference step")
      ->capture_default_str();
  ge->add_option("--mode", geodesic.mode)->check(CLI::IsMember(modes))->capture_default_str();
  ge->add_option("--out", geodesic.out, "output file (default stdout)");

  VerifyArgs verify;
  auto* ve = app.add_subcommand("verify", "randomized property suites");
  std::vector<std::string> suites = jg::suite_names();
  suites.push_back("all");
  ve->add_option("--suite", verify.suite)->check(CLI::IsMember(suites))->capture_default_str();
  ve->add_option("--dim", verify.dim)->capture_default_str();
  ve->add_option("--trials", verify.trials)->capture_default_str();

  ConnectArgs connect;
  auto* co = app.add_subcommand("connect", "unitaries carrying a onto b");
  co->add_option("a", connect.a_file)->required();
  co->add_option("b", connect.b_file)->required();
  co->add_option("--mode", connect.mode)->check(CLI::IsMember(modes))->capture_default_str();
  co->add_option("--out", connect.out, "file for U");
  co->add_option("--out-v", connect.out_v, "file for V (jb mode)");

  RandomArgs random;
  auto* ra = app.add_subcommand("random", "sample a point of a component");
  ra->add_option("--component", random.component, "value:rank list, e.g. 2:1,5:2")
      ->required();
  ra->add_option("--dim", random.dim);
  ra->add_option("--rows", random.rows, "jb mode");
  ra->add_option("--cols", random.cols, "jb mode");
  ra->add_option("--mode", random.mode)->check(CLI::IsMember(modes))->capture_default_str();
  ra->add_option("--out", random.out, "output file (default stdout)");

  FiberArgs fiber;
  auto* fi = app.add_subcommand("fiber", "points of the equivalence fiber through a");
  fi->add_option("a", fiber.a_file)->required();
  fi->add_option("v", fiber.v_file, "sum of selfadjoint Peirce-1 parts")->required();
  fi->add_option("--t-list", fiber.t_list, "comma separated parameters")
      ->capture_default_str();
  fi->add_option("--out", fiber.out, "output file (default stdout)");

  PeirceArgs peirce;
  auto* pe = app.add_subcommand("peirce", "Peirce decomposition relative to a tripotent");
  pe->add_option("e", peirce.e_file)->required();
  pe->add_option("--z", peirce.z_file, "element to decompose");

  TangentArgs tangent;
  auto* ta = app.add_subcommand("tangent", "tangent space report");
  ta->add_option("a", tangent.a_file)->required();
  ta->add_option("--u", tangent.u_file, "candidate tangent vector");
  ta->add_option("--mode", tangent.mode)->check(CLI::IsMember(modes))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (tol_opt->count() > 0) globals.tol = tol_value;

  try {
    if (*sp) return cmd_spectral(spectral, globals);
    if (*ge) return cmd_geodesic(geodesic, globals);
    if (*ve) return cmd_verify(verify, globals);
    if (*co) return cmd_connect(connect, globals);
    if (*ra) return cmd_random(random, globals);
    if (*fi) return cmd_fiber(fiber, globals);
    if (*pe) return cmd_peirce(peirce, globals);
    if (*ta) return cmd_tangent(tangent, globals);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const jg::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainFailure& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kDomain;
  } catch (const jg::Error& e) {
    std::cerr << "error: " << describe(e) << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
