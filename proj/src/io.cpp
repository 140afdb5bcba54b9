#include "jordangeo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace jordangeo {

namespace {

using nlohmann::json;

double number_at(const json& pair, std::size_t i) {
  const json& v = pair.at(i);
  if (!v.is_number()) throw IoError("matrix entry is not a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw IoError("matrix entry is not finite");
  return x;
}

Eigen::Index dimension(const json& doc, const char* key) {
  if (!doc.contains(key)) throw IoError(std::string("missing field \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_unsigned()) {
    throw IoError(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  const auto n = v.get<std::uint64_t>();
  if (n > 4096) throw IoError(std::string("field \"") + key + "\" is too large");
  return static_cast<Eigen::Index>(n);
}

}  // namespace

Matrix parse_matrix(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw IoError("matrix file must hold a JSON object");
  const Eigen::Index rows = dimension(doc, "rows");
  const Eigen::Index cols = dimension(doc, "cols");
  if (!doc.contains("data") || !doc.at("data").is_array()) {
    throw IoError("missing array field \"data\"");
  }
  const json& data = doc.at("data");
  if (data.size() != static_cast<std::size_t>(rows * cols)) {
    throw IoError("\"data\" holds " + std::to_string(data.size()) +
                  " entries, expected rows*cols = " + std::to_string(rows * cols));
  }
  Matrix m(rows, cols);
  std::size_t at = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j, ++at) {
      const json& pair = data[at];
      if (!pair.is_array() || pair.size() != 2) {
        throw IoError("each entry must be a [re, im] pair");
      }
      m(i, j) = Complex(number_at(pair, 0), number_at(pair, 1));
    }
  }
  return m;
}

std::string serialize_matrix(const Matrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw IoError("cannot serialize a non-finite entry");
      }
      data.push_back(json::array({z.real(), z.imag()}));
    }
  }
  json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  doc["data"] = std::move(data);
  return doc.dump() + "\n";
}

Matrix read_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_matrix(const std::string& path, const Matrix& m) {
  const std::string text = serialize_matrix(m);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string trajectory_header(Eigen::Index rows, Eigen::Index cols) {
  std::string out = "t";
  for (Eigen::Index k = 0; k < rows * cols; ++k) {
    out += ",z_" + std::to_string(k) + "_re,z_" + std::to_string(k) + "_im";
  }
  return out + ",residual";
}

std::string trajectory_row(double t, const Matrix& z, double residual) {
  std::string out = format_double(t);
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
      out += ',' + format_double(z(i, j).real());
      out += ',' + format_double(z(i, j).imag());
    }
  }
  return out + ',' + format_double(residual);
}

}  // namespace jordangeo
