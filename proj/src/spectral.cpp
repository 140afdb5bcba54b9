#include "jordangeo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jordangeo/linalg.hpp"

namespace jordangeo {

Matrix SpectralResolution::reconstruct() const {
  if (projections.empty()) return {};
  Matrix out = Matrix::Zero(projections.front().rows(), projections.front().cols());
  for (std::size_t k = 0; k < values.size(); ++k) out += values[k] * projections[k];
  return out;
}

bool ComponentSignature::matches(const ComponentSignature& other,
                                 double value_tol) const {
  if (values.size() != other.values.size()) return false;
  std::vector<bool> used(other.values.size(), false);
  for (std::size_t k = 0; k < values.size(); ++k) {
    bool found = false;
    for (std::size_t j = 0; j < other.values.size(); ++j) {
      if (used[j] || ranks[k] != other.ranks[j]) continue;
      const double scale = std::max(1.0, std::abs(values[k]));
      if (std::abs(values[k] - other.values[j]) <= value_tol * scale) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::string ComponentSignature::to_string() const {
  std::ostringstream os;
  os.precision(10);
  os << "n=" << values.size() << " Λ=(";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) os << ", ";
    // Display only: drop parts below printing precision.
    Complex v = values[k];
    const double eps = 1e-12 * std::abs(v);
    if (std::abs(v.imag()) <= eps) v.imag(0.0);
    if (std::abs(v.real()) <= eps) v.real(0.0);
    if (v.imag() == 0.0) {
      os << v.real();
    } else {
      os << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    }
  }
  os << ") R=(";
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    if (k) os << ", ";
    os << ranks[k];
  }
  os << ")";
  return os.str();
}

bool is_normal(const Matrix& a, const Tolerance& tol) {
  require_square(a, "is_normal");
  return normality_residual(a) <= tol.abs * std::max(1.0, a.squaredNorm());
}

std::vector<Complex> minimal_polynomial(const Matrix& a, const Tolerance& tol) {
  std::vector<Complex> roots;
  for (const auto& pair : eig_normal(a, tol)) {
    roots.push_back(std::abs(pair.value) <= tol.cluster() ? Complex(0.0)
                                                          : pair.value);
  }
  return roots;
}

Matrix evaluate_polynomial(const std::vector<Complex>& roots, const Matrix& a) {
  require_square(a, "evaluate_polynomial");
  Matrix out = identity(a.rows());
  for (const Complex& mu : roots) out = out * (a - mu * identity(a.rows()));
  return out;
}

SpectralResolution spectral_resolution(const Matrix& a, const Tolerance& tol) {
  const auto pairs = eig_normal(a, tol);
  const double rank_threshold = 1e-8 * static_cast<double>(a.rows());
  SpectralResolution res;
  for (const auto& pair : pairs) {
    const Eigen::Index r = numerical_rank(pair.projector, rank_threshold);
    if (std::abs(pair.value) <= tol.cluster()) {
      res.kernel_rank += r;
      continue;
    }
    res.values.push_back(pair.value);
    res.projections.push_back(pair.projector);
    res.ranks.push_back(r);
  }
  return res;
}

Support support(const Matrix& a, const Tolerance& tol) {
  const SpectralResolution res = spectral_resolution(a, tol);
  Support s{Matrix::Zero(a.rows(), a.cols()), 0};
  for (std::size_t k = 0; k < res.size(); ++k) {
    s.projection += res.projections[k];
    s.rank += res.ranks[k];
  }
  return s;
}

ComponentSignature signature_of(const SpectralResolution& res) {
  if (res.values.empty()) {
    throw Error(ErrorKind::ZeroElement,
                "signature: the zero element has no nonzero spectral value");
  }
  std::vector<std::size_t> order(res.values.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return complex_less(res.values[x], res.values[y]);
  });
  ComponentSignature sig;
  for (std::size_t k : order) {
    sig.values.push_back(res.values[k]);
    sig.ranks.push_back(res.ranks[k]);
  }
  return sig;
}

ComponentSignature signature(const Matrix& a, const Tolerance& tol) {
  return signature_of(spectral_resolution(a, tol));
}

std::vector<Matrix> vandermonde_projections(const Matrix& a,
                                            const std::vector<Complex>& values,
                                            const Tolerance& tol) {
  require_square(a, "vandermonde_projections");
  const std::size_t n = values.size();
  if (n == 0) {
    throw Error(ErrorKind::SingularVandermonde, "no spectral values given");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(values[k]) <= tol.cluster()) {
      throw Error(ErrorKind::SingularVandermonde, "spectral value is zero");
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (std::abs(values[k] - values[j]) <= tol.cluster()) {
        throw Error(ErrorKind::SingularVandermonde, "repeated spectral value");
      }
    }
  }

  const SpectralResolution res = spectral_resolution(a, tol);
  ComponentSignature given{values, std::vector<Eigen::Index>(n, 0)};
  ComponentSignature actual{res.values, std::vector<Eigen::Index>(res.size(), 0)};
  if (!actual.matches(given, tol.cluster())) {
    throw Error(ErrorKind::SpectrumMismatch,
                "vandermonde_projections: values are not the nonzero spectrum");
  }

  // V(l, k) = λ_k^(l+1); a^(l+1) = sum_k V(l, k) e_k.
  const auto ni = static_cast<Eigen::Index>(n);
  Matrix v(ni, ni);
  for (Eigen::Index k = 0; k < ni; ++k) {
    Complex p = values[static_cast<std::size_t>(k)];
    for (Eigen::Index l = 0; l < ni; ++l) {
      v(l, k) = p;
      p *= values[static_cast<std::size_t>(k)];
    }
  }
  const Matrix w = v.fullPivLu().inverse();

  std::vector<Matrix> powers;
  Matrix p = a;
  for (Eigen::Index l = 0; l < ni; ++l) {
    powers.push_back(p);
    p = p * a;
  }
  std::vector<Matrix> out;
  for (Eigen::Index k = 0; k < ni; ++k) {
    Matrix e = Matrix::Zero(a.rows(), a.cols());
    for (Eigen::Index l = 0; l < ni; ++l) e += w(k, l) * powers[static_cast<std::size_t>(l)];
    out.push_back(std::move(e));
  }
  return out;
}

bool same_component(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (!is_normal(a, tol) || !is_normal(b, tol)) {
    throw Error(ErrorKind::NotNormal, "same_component: input is not normal");
  }
  return signature(a, tol).matches(signature(b, tol), tol.cluster());
}

Matrix unitary_connect(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  require_same_shape(a, b, "unitary_connect");
  const SpectralResolution ra = spectral_resolution(a, tol);
  const SpectralResolution rb = spectral_resolution(b, tol);
  if (ra.values.empty() && rb.values.empty()) return identity(a.rows());
  if (ra.values.empty() || rb.values.empty() ||
      !signature_of(ra).matches(signature_of(rb), tol.cluster())) {
    throw Error(ErrorKind::DifferentComponents,
                "unitary_connect: elements lie in different components");
  }

  const Eigen::Index d = a.rows();
  Matrix wa(d, 0);
  Matrix wb(d, 0);
  auto append = [](Matrix& w, const Matrix& cols) {
    Matrix grown(w.rows(), w.cols() + cols.cols());
    grown << w, cols;
    w = std::move(grown);
  };
  std::vector<bool> used(rb.size(), false);
  for (std::size_t k = 0; k < ra.size(); ++k) {
    std::size_t match = rb.size();
    for (std::size_t j = 0; j < rb.size(); ++j) {
      const double scale = std::max(1.0, std::abs(ra.values[k]));
      if (!used[j] && ra.ranks[k] == rb.ranks[j] &&
          std::abs(ra.values[k] - rb.values[j]) <= tol.cluster() * scale) {
        match = j;
        break;
      }
    }
    used[match] = true;
    append(wa, orthonormal_range(ra.projections[k]));
    append(wb, orthonormal_range(rb.projections[match]));
  }
  append(wa, orthonormal_complement(wa));
  append(wb, orthonormal_complement(wb));
  return wb * wa.adjoint();
}

Matrix involution_image(const Matrix& a) { return a.adjoint(); }

}  // namespace jordangeo
