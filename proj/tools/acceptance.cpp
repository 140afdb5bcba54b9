// Acceptance run: one PASS/FAIL line per criterion.
//
// Criteria 1-9 run the verification suites at 100 seeded trials over
// dimensions 2..6 (2..4 for the axioms) and check a named subset of their
// properties. Criterion 10 drives the jordangeo executable.
//
// usage: acceptance [--cli PATH] [--corpus DIR] [--seed N] [--trials N] [-v]

#include <array>
#include <cmath>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <CLI11.hpp>

#include "jordangeo/io.hpp"
#include "jordangeo/random.hpp"
#include "jordangeo/suites.hpp"

namespace fs = std::filesystem;
namespace jg = jordangeo;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::string suite;
  int dim_lo;
  int dim_hi;
  std::vector<std::string> properties;  // empty: every property of the suite
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "JB*-axioms", "axioms", 2, 4,
       {"axiom1_symmetry_linearity", "axiom2_commutator", "axiom3_hermitian",
        "axiom3_min_spectrum", "axiom4_norm_identity"}},
      {2, "Peirce calculus", "peirce", 2, 6,
       {"projections_sum_to_identity", "idempotence", "mutual_annihilation",
        "eigenvalue_relation", "multiplication_rules", "one_box_zero"}},
      {3, "spectral resolutions", "spectral", 2, 6,
       {"resolution_roundtrip", "vandermonde_recovery", "algebraicity",
        "support_covariance"}},
      {4, "derivation dichotomy", "derivations", 2, 6,
       {"selfadjoint_leibniz", "nonselfadjoint_leibniz"}},
      {5, "Phi_a closed form and inverse", "manifold", 2, 6,
       {"phi_closed_form", "phi_inverse_roundtrip"}},
      {6, "geodesics", "manifold", 2, 6,
       {"geodesic_origin_exact", "geodesic_velocity", "geodesic_residual",
        "signature_preserved_selfadjoint", "jb_signature_preserved",
        "geodesic_rotation_closed_form"}},
      {7, "invariant connection", "metric", 2, 6,
       {"torsion", "metric_compatibility", "metric_compatibility_general",
        "hermitian_connection"}},
      {8, "Aut(Z) invariance", "", 2, 6, {}},  // assembled below
      {9, "rectangular JB*-triples", "jb", 2, 6, {}},
  };
  return list;
}

// Criterion 8 spans two suites.
const std::vector<std::pair<std::string, std::string>> kInvariance{
    {"manifold", "aut_invariance_geodesic"},
    {"manifold", "aut_invariance_signature"},
    {"metric", "metric_aut_invariance"},
};

using ReportKey = std::pair<std::string, int>;

struct Outcome {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

void absorb(Outcome& out, const jg::PropertyResult& p, int dim) {
  ++out.checked;
  if (!p.pass()) {
    out.pass = false;
    std::ostringstream os;
    os << p.name << "@dim" << dim << " worst=" << p.worst << " limit=" << p.limit;
    out.failures.push_back(os.str());
  }
}

struct ProcessResult {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs a command through the shell, capturing stdout; stderr is discarded.
ProcessResult run(const std::string& cmd) {
  ProcessResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome cli_criterion(const std::string& cli, const fs::path& corpus, std::uint64_t seed) {
  Outcome out;
  auto expect = [&](bool ok, const std::string& what) {
    ++out.checked;
    if (!ok) {
      out.pass = false;
      out.failures.push_back(what);
    }
  };
  const std::string bin = quote(cli);
  const std::string s = std::to_string(seed);

  // identical seeds, byte-identical reports (text and JSON)
  for (const std::string fmt : {"", "--json "}) {
    const std::string cmd = bin + " " + fmt + "--seed " + s + " verify --suite all --trials 5";
    const ProcessResult a = run(cmd), b = run(cmd);
    expect(a.code == 0 && b.code == 0, "verify exit code (" + cmd + ")");
    expect(!a.out.empty() && a.out == b.out, "verify report differs between runs");
  }

  const fs::path tmp = fs::temp_directory_path() /
                       ("jordangeo-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  struct Cleanup {
    fs::path dir;
    ~Cleanup() {
      std::error_code ec;
      fs::remove_all(dir, ec);
    }
  } cleanup{tmp};
  const fs::path m1 = tmp / "a1.json", m2 = tmp / "a2.json";
  const std::string rnd = bin + " --seed " + s + " random --component 2:1,5:2 --dim 4 --out ";
  expect(run(rnd + quote(m1.string())).code == 0, "random exit code");
  expect(run(rnd + quote(m2.string())).code == 0, "random exit code");
  expect(slurp(m1) == slurp(m2) && !slurp(m1).empty(), "random output differs between runs");

  // identical seeds, byte-identical trajectory CSV
  {
    const fs::path e11 = tmp / "e11.json", u = tmp / "u.json";
    jg::Matrix a = jg::Matrix::Zero(2, 2), v = jg::Matrix::Zero(2, 2);
    a(0, 0) = 1.0;
    v(0, 1) = v(1, 0) = 1.0;
    jg::write_matrix(e11.string(), a);
    jg::write_matrix(u.string(), v);
    const std::string cmd = bin + " geodesic " + quote(e11.string()) + " " +
                            quote(u.string()) + " --t1 3.141592653589793 --steps 64";
    const ProcessResult g1 = run(cmd), g2 = run(cmd);
    expect(g1.code == 0 && g1.out == g2.out, "geodesic CSV differs between runs");
  }

  // bit-exact matrix round trip, in process and through the CLI
  {
    jg::Rng rng(seed ^ 0x5eedULL);
    bool exact = true;
    for (int trial = 0; trial < 200; ++trial) {
      const int rows = rng.uniform_int(1, 6), cols = rng.uniform_int(1, 6);
      jg::Matrix m(rows, cols);
      for (Eigen::Index k = 0; k < m.size(); ++k) {
        const double scale = std::pow(10.0, rng.uniform(-300.0, 300.0));
        m.data()[k] = {rng.normal() * scale, rng.normal()};
      }
      const jg::Matrix back = jg::parse_matrix(jg::serialize_matrix(m));
      exact = exact && std::memcmp(m.data(), back.data(), sizeof(jg::Complex) * m.size()) == 0;
    }
    expect(exact, "in-process JSON round trip not bit-exact");
    const jg::Matrix a = jg::read_matrix(m1.string());
    expect(jg::serialize_matrix(a) == slurp(m1), "CLI-written matrix does not re-serialize to "
                                                 "the same bytes");
  }

  // documented exit codes on the malformed corpus
  if (!fs::is_directory(corpus)) {
    expect(false, "malformed corpus not found at " + corpus.string());
  } else {
    std::set<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus)) files.insert(entry.path());
    expect(files.size() >= 10, "malformed corpus has fewer than 10 files");
    const std::string good = quote((tmp / "e11.json").string());
    for (const fs::path& f : files) {
      const std::string q = quote(f.string());
      for (const std::string& args :
           {"spectral " + q, "geodesic " + q + " " + good, "connect " + good + " " + q,
            "fiber " + good + " " + q, "peirce " + q, "tangent " + q}) {
        const int code = run(bin + " " + args).code;
        expect(code == 2, "exit " + std::to_string(code) + " (want 2) for " + args);
      }
    }
  }
  // domain failures exit 1, success 0
  {
    const fs::path e12 = tmp / "e12.json";
    jg::Matrix m = jg::Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    jg::write_matrix(e12.string(), m);
    expect(run(bin + " spectral " + quote(e12.string())).code == 1, "not normal exit code");
    expect(run(bin + " random --component 2:3 --dim 2").code == 2, "infeasible exit code");
    expect(run(bin + " spectral " + quote(m1.string())).code == 0, "success exit code");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string cli = JORDANGEO_CLI_PATH;
  std::string corpus = JORDANGEO_CORPUS_DIR;
  std::uint64_t seed = 20240611;
  std::size_t trials = 100;
  bool verbose = false;
  app.add_option("--cli", cli, "jordangeo executable")->capture_default_str();
  app.add_option("--corpus", corpus, "malformed-input directory")->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--trials", trials)->capture_default_str();
  app.add_flag("-v,--verbose", verbose, "list every failing property");
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  std::map<ReportKey, jg::SuiteReport> reports;
  auto report = [&](const std::string& suite, int dim) -> const jg::SuiteReport& {
    auto it = reports.find({suite, dim});
    if (it == reports.end()) {
      jg::SuiteOptions o;
      o.suite = suite;
      o.dim = dim;
      o.trials = trials;
      o.seed = seed;
      it = reports.emplace(ReportKey{suite, dim}, jg::run_suite(o)).first;
    }
    return it->second;
  };

  bool all = true;
  auto print = [&](int id, const std::string& title, const Outcome& o,
                   const std::string& scope) {
    all = all && o.pass;
    std::printf("%s  criterion %2d  %-32s %zu checks  %s\n", o.pass ? "PASS" : "FAIL", id,
                title.c_str(), o.checked, scope.c_str());
    if (!o.pass) {
      const std::size_t shown = verbose ? o.failures.size() : std::min<std::size_t>(3, o.failures.size());
      for (std::size_t k = 0; k < shown; ++k) std::printf("      %s\n", o.failures[k].c_str());
    }
  };

  for (const Criterion& c : criteria()) {
    Outcome o;
    std::vector<std::pair<std::string, std::string>> wanted;
    if (c.id == 8) {
      wanted = kInvariance;
    } else {
      for (const auto& p : c.properties) wanted.emplace_back(c.suite, p);
    }
    for (int dim = c.dim_lo; dim <= c.dim_hi; ++dim) {
      if (wanted.empty()) {
        const jg::SuiteReport& r = report(c.suite, dim);
        for (const auto& p : r.properties) absorb(o, p, dim);
        if (!r.warnings.empty()) {
          o.pass = false;
          o.failures.insert(o.failures.end(), r.warnings.begin(), r.warnings.end());
        }
        continue;
      }
      for (const auto& [suite, name] : wanted) {
        const jg::SuiteReport& r = report(suite, dim);
        bool found = false;
        for (const auto& p : r.properties) {
          if (p.name != name) continue;
          found = true;
          absorb(o, p, dim);
        }
        if (!found) {
          o.pass = false;
          o.failures.push_back("missing property " + suite + "/" + name);
        }
      }
    }
    std::ostringstream scope;
    scope << "(dims " << c.dim_lo << "-" << c.dim_hi << ", " << trials << " trials)";
    print(c.id, c.title, o, scope.str());
  }

  Outcome cli_outcome;
  try {
    cli_outcome = cli_criterion(cli, corpus, seed);
  } catch (const std::exception& e) {
    cli_outcome.pass = false;
    cli_outcome.failures.push_back(e.what());
  }
  print(10, "CLI determinism and exit codes", cli_outcome,
        "(" + fs::path(cli).filename().string() + ")");

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s  %.1f s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED", secs);
  return all ? 0 : 1;
}
