#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace jordangeo {

using Complex = std::complex<double>;

/// Dense complex matrix; elements of Z = L(H) and of rectangular Cartan factors.
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Numerical tolerances shared by every check in the library.
///
/// A residual r measured against a quantity of size `scale` passes when
/// r <= abs + rel * scale.
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;
  double fd_step = 1e-5;

  double bound(double scale = 0.0) const { return abs + rel * scale; }
  bool accepts(double residual, double scale = 0.0) const {
    return residual <= bound(scale);
  }
  /// Spectral values closer than this are merged into one.
  double cluster() const { return 10.0 * abs; }

  /// Throws InvalidArgument if any field is negative or not finite.
  void validate() const;
};

enum class ErrorKind {
  InvalidArgument,
  NotSquare,
  NotNormal,
  ShapeMismatch,
  ConjugateLinearInput,
  NonFinite,
  Singular,
  NotTripotent,
  NotOrthogonalFamily,
  NotInPeirceOne,
  ZeroElement,
  SingularVandermonde,
  SpectrumMismatch,
  DifferentComponents,
  NotTangent,
  NotInA,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Outcome of a sampled identity check: the worst residual seen and whether
/// it is within tolerance.
struct Check {
  bool pass = true;
  double residual = 0.0;
};

}  // namespace jordangeo
