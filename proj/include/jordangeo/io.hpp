#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "jordangeo/types.hpp"

namespace jordangeo {

/// Malformed or unreadable input; the CLI maps it to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix files: {"rows": m, "cols": n, "data": [[re, im], ...]}, row-major.
// Doubles are written in shortest round-trip form, so parse(serialize(m))
// reproduces m bit for bit.

Matrix parse_matrix(const std::string& text);
std::string serialize_matrix(const Matrix& m);
Matrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const Matrix& m);

/// %.17g, the CSV number format.
std::string format_double(double x);

/// Header t,z_0_re,z_0_im,...,residual with z_k in row-major order.
std::string trajectory_header(Eigen::Index rows, Eigen::Index cols);
std::string trajectory_row(double t, const Matrix& z, double residual);

}  // namespace jordangeo
