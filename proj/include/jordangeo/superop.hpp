#pragma once

#include "jordangeo/types.hpp"

namespace jordangeo {

enum class Linearity { complex_linear, conjugate_linear };

/// Shape of a matrix space M_{rows x cols}.
struct Shape {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;

  Eigen::Index size() const { return rows * cols; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

Shape shape_of(const Matrix& m);

/// Column-stacking vectorization; vec(A X B) = (B^T kron A) vec(X).
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Shape shape);

/// Real-linear map between matrix spaces, stored as a complex kernel acting
/// on vectorized matrices.
///
/// A conjugate-linear operator S acts as S(z) = unvec(kernel * vec(conj z)).
/// Composition and scaling track the linearity flag; sums are only defined for
/// operators of the same flavor.
class SuperOperator {
 public:
  SuperOperator(Shape in, Shape out, Matrix kernel,
                Linearity linearity = Linearity::complex_linear);

  static SuperOperator identity(Shape shape);
  static SuperOperator zero(Shape shape);
  /// z -> conj(z), entrywise.
  static SuperOperator conjugation(Shape shape);

  Shape dim_in() const { return in_; }
  Shape dim_out() const { return out_; }
  const Matrix& kernel() const { return kernel_; }
  Linearity linearity() const { return linearity_; }
  bool is_complex_linear() const {
    return linearity_ == Linearity::complex_linear;
  }

  Matrix apply(const Matrix& z) const;

  /// (*this) after `inner`, i.e. z -> this(inner(z)).
  SuperOperator compose(const SuperOperator& inner) const;

  SuperOperator operator+(const SuperOperator& other) const;
  SuperOperator operator-(const SuperOperator& other) const;
  SuperOperator operator*(Complex scale) const;
  SuperOperator operator-() const;

 private:
  Shape in_;
  Shape out_;
  Matrix kernel_;
  Linearity linearity_;
};

inline SuperOperator operator*(Complex scale, const SuperOperator& op) {
  return op * scale;
}

/// super_apply: S(z). Throws ShapeMismatch.
Matrix super_apply(const SuperOperator& op, const Matrix& z);

/// Exponential of a complex-linear operator with square kernel.
/// Throws ConjugateLinearInput.
SuperOperator super_exp(const SuperOperator& op);

/// Commutator [a, b] = ab - ba of complex-linear endomorphisms.
SuperOperator commutator(const SuperOperator& a, const SuperOperator& b);

}  // namespace jordangeo
