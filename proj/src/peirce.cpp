#include "jordangeo/peirce.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "jordangeo/linalg.hpp"
#include "jordangeo/random.hpp"

namespace jordangeo {

double eigenvalue(PeirceSpace k) {
  switch (k) {
    case PeirceSpace::one: return 1.0;
    case PeirceSpace::half: return 0.5;
    case PeirceSpace::zero: return 0.0;
  }
  return 0.0;
}

std::optional<PeirceSpace> peirce_sum(PeirceSpace i, PeirceSpace j,
                                      PeirceSpace k) {
  // Work in units of 1/2 to stay exact.
  auto twice = [](PeirceSpace s) { return static_cast<int>(2 * eigenvalue(s)); };
  switch (twice(i) - twice(j) + twice(k)) {
    case 2: return PeirceSpace::one;
    case 1: return PeirceSpace::half;
    case 0: return PeirceSpace::zero;
    default: return std::nullopt;
  }
}

const SuperOperator& PeirceDecomposition::projection(PeirceSpace k) const {
  switch (k) {
    case PeirceSpace::one: return p1;
    case PeirceSpace::half: return p12;
    case PeirceSpace::zero: return p0;
  }
  return p0;
}

const std::vector<Matrix>& PeirceDecomposition::basis(PeirceSpace k) const {
  switch (k) {
    case PeirceSpace::one: return basis1;
    case PeirceSpace::half: return basis12;
    case PeirceSpace::zero: return basis0;
  }
  return basis0;
}

std::vector<Matrix> projection_basis(const SuperOperator& projection,
                                     double threshold) {
  if (!projection.is_complex_linear()) {
    throw Error(ErrorKind::ConjugateLinearInput,
                "projection_basis: projection must be complex-linear");
  }
  const Matrix q = orthonormal_range(projection.kernel(), threshold);
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(q.cols()));
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    out.push_back(unvec(q.col(j), projection.dim_out()));
  }
  return out;
}

PeirceDecomposition peirce_projections(const Tripotent& e) {
  const Matrix& m = e.matrix();
  const SuperOperator q = quad(m, m);
  const SuperOperator q2 = q.compose(q);
  const SuperOperator l = box(m, m);
  const SuperOperator id = SuperOperator::identity(e.shape());

  SuperOperator p1 = q2;
  SuperOperator p12 = (l - q2) * Complex(2.0);
  SuperOperator p0 = id - l * Complex(2.0) + q2;
  auto b1 = projection_basis(p1);
  auto b12 = projection_basis(p12);
  auto b0 = projection_basis(p0);
  return {e,           std::move(p1),  std::move(p12), std::move(p0),
          std::move(b1), std::move(b12), std::move(b0)};
}

Matrix peirce_part(const Tripotent& e, const Matrix& z, PeirceSpace k) {
  return peirce_component(e.matrix(), z, k);
}

Matrix peirce_component(const Matrix& m, const Matrix& z, PeirceSpace k) {
  require_same_shape(m, z, "peirce_component");
  // Direct evaluation of the three projection formulas on z.
  const Matrix q2z = triple_product(m, triple_product(m, z, m), m);
  switch (k) {
    case PeirceSpace::one: return q2z;
    case PeirceSpace::half: return 2.0 * (triple_product(m, m, z) - q2z);
    case PeirceSpace::zero: return z - 2.0 * triple_product(m, m, z) + q2z;
  }
  return q2z;
}

bool in_peirce_space(const SuperOperator& projection, const Matrix& z,
                     const Tolerance& tol) {
  const double residual = (projection.apply(z) - z).norm();
  return residual <= tol.abs * std::max(1.0, z.norm());
}

const SuperOperator& JointPeirceDecomposition::projection(int j, int k) const {
  if (j > k) std::swap(j, k);
  auto it = projections.find({j, k});
  if (it == projections.end()) {
    throw Error(ErrorKind::InvalidArgument,
                "joint Peirce index out of range: (" + std::to_string(j) +
                    ", " + std::to_string(k) + ")");
  }
  return it->second;
}

JointPeirceDecomposition joint_peirce(const std::vector<Tripotent>& family,
                                      const Tolerance& tol) {
  if (family.empty()) {
    throw Error(ErrorKind::InvalidArgument, "joint_peirce: empty family");
  }
  const Shape shape = family.front().shape();
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (family[j].shape() != shape) {
      throw Error(ErrorKind::ShapeMismatch, "joint_peirce: shapes differ");
    }
    for (std::size_t k = j + 1; k < family.size(); ++k) {
      if (!are_orthogonal(family[j].matrix(), family[k].matrix(), tol)) {
        throw Error(ErrorKind::NotOrthogonalFamily,
                    "joint_peirce: tripotents " + std::to_string(j + 1) +
                        " and " + std::to_string(k + 1) +
                        " are not orthogonal");
      }
    }
  }

  std::vector<PeirceDecomposition> single;
  single.reserve(family.size());
  for (const auto& e : family) single.push_back(peirce_projections(e));

  const int n = static_cast<int>(family.size());
  JointPeirceDecomposition out{family, {}};
  SuperOperator all_zero = SuperOperator::identity(shape);
  for (int j = 1; j <= n; ++j) {
    const auto& pj = single[j - 1];
    out.projections.emplace(std::pair{j, j}, pj.p1);
    for (int k = j + 1; k <= n; ++k) {
      out.projections.emplace(std::pair{j, k},
                              pj.p12.compose(single[k - 1].p12));
    }
    SuperOperator edge = pj.p12;
    for (int k = 1; k <= n; ++k) {
      if (k != j) edge = edge.compose(single[k - 1].p0);
    }
    out.projections.emplace(std::pair{0, j}, std::move(edge));
    all_zero = all_zero.compose(pj.p0);
  }
  out.projections.emplace(std::pair{0, 0}, std::move(all_zero));
  return out;
}

PeirceRuleReport verify_peirce_rules(const Tripotent& e, std::size_t samples,
                                     std::uint64_t seed) {
  const PeirceDecomposition pd = peirce_projections(e);
  const Shape shape = e.shape();
  constexpr std::array kSpaces{PeirceSpace::one, PeirceSpace::half,
                               PeirceSpace::zero};
  Rng rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(shape.size()));
  auto draw = [&](PeirceSpace k) {
    return pd.projection(k).apply(rng.gaussian(shape.rows, shape.cols) * scale);
  };

  PeirceRuleReport report;
  report.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    for (PeirceSpace i : kSpaces) {
      const Matrix x = draw(i);
      for (PeirceSpace j : kSpaces) {
        const Matrix y = draw(j);
        for (PeirceSpace k : kSpaces) {
          const Matrix z = draw(k);
          const Matrix p = triple_product(x, y, z);
          const auto target = peirce_sum(i, j, k);
          const double r = target ? (pd.projection(*target).apply(p) - p).norm()
                                  : p.norm();
          report.rules = std::max(report.rules, r);
        }
      }
    }
    const Matrix x1 = draw(PeirceSpace::one);
    const Matrix x0 = draw(PeirceSpace::zero);
    report.one_box_zero =
        std::max({report.one_box_zero, box(x1, x0).kernel().norm(),
                  box(x0, x1).kernel().norm()});
  }
  return report;
}

Matrix peirce_involution(const Tripotent& e, const Matrix& x) {
  return triple_product(e.matrix(), x, e.matrix());
}

std::pair<Matrix, Matrix> selfadjoint_split(const Tripotent& e, const Matrix& z,
                                            const Tolerance& tol) {
  require_same_shape(e.matrix(), z, "selfadjoint_split");
  const Matrix z1 = peirce_part(e, z, PeirceSpace::one);
  if ((z1 - z).norm() > tol.abs * std::max(1.0, z.norm())) {
    throw Error(ErrorKind::NotInPeirceOne,
                "selfadjoint_split: element is not in the Peirce 1-space");
  }
  const Matrix zs = peirce_involution(e, z);
  Matrix h = (z + zs) / 2.0;
  Matrix k = (z - zs) / (2.0 * kI);
  return {std::move(h), std::move(k)};
}

SuperOperator peirce_reflection(const Tripotent& e) {
  return SuperOperator::identity(e.shape()) - peirce_projections(e).p12 * Complex(2.0);
}

}  // namespace jordangeo
