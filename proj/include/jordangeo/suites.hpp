#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jordangeo/types.hpp"

namespace jordangeo {

// Seeded randomized verification suites behind `jordangeo verify`.
// Reports depend only on the options, never on timing or thread layout.

struct SuiteOptions {
  std::string suite = "all";
  int dim = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  Tolerance tol;
};

enum class Bound { at_most, at_least };

/// Worst observed value of one property against its limit: the maximum for
/// `at_most` bounds, the minimum for `at_least` bounds.
struct PropertyResult {
  std::string suite;
  std::string name;
  Bound kind = Bound::at_most;
  double limit = 0.0;
  double worst = 0.0;
  std::size_t count = 0;

  void record(double value);
  bool pass() const;
};

struct SuiteReport {
  std::string suite;
  int dim = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  std::vector<std::string> warnings;

  bool pass() const;
  std::string text() const;
  std::string json() const;
};

/// axioms, peirce, spectral, derivations, manifold, metric, jb.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite or a dimension outside [2, 8].
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace jordangeo
