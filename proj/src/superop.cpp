#include "jordangeo/superop.hpp"

#include <utility>

#include "jordangeo/linalg.hpp"

namespace jordangeo {

namespace {

std::string shape_str(Shape s) {
  return std::to_string(s.rows) + "x" + std::to_string(s.cols);
}

}  // namespace

Shape shape_of(const Matrix& m) { return {m.rows(), m.cols()}; }

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, Shape shape) {
  if (v.size() != shape.size()) {
    throw Error(ErrorKind::ShapeMismatch, "unvec: length does not match shape");
  }
  return Eigen::Map<const Matrix>(v.data(), shape.rows, shape.cols);
}

SuperOperator::SuperOperator(Shape in, Shape out, Matrix kernel,
                             Linearity linearity)
    : in_(in), out_(out), kernel_(std::move(kernel)), linearity_(linearity) {
  if (kernel_.rows() != out_.size() || kernel_.cols() != in_.size()) {
    throw Error(ErrorKind::ShapeMismatch,
                "SuperOperator: kernel does not match " + shape_str(in_) +
                    " -> " + shape_str(out_));
  }
}

SuperOperator SuperOperator::identity(Shape shape) {
  return {shape, shape, Matrix::Identity(shape.size(), shape.size())};
}

SuperOperator SuperOperator::zero(Shape shape) {
  return {shape, shape, Matrix::Zero(shape.size(), shape.size())};
}

SuperOperator SuperOperator::conjugation(Shape shape) {
  return {shape, shape, Matrix::Identity(shape.size(), shape.size()),
          Linearity::conjugate_linear};
}

Matrix SuperOperator::apply(const Matrix& z) const {
  if (shape_of(z) != in_) {
    throw Error(ErrorKind::ShapeMismatch, "super_apply: operator acts on " +
                                              shape_str(in_) + ", got " +
                                              shape_str(shape_of(z)));
  }
  if (is_complex_linear()) return unvec(kernel_ * vec(z), out_);
  return unvec(kernel_ * vec(z.conjugate()), out_);
}

SuperOperator SuperOperator::compose(const SuperOperator& inner) const {
  if (inner.out_ != in_) {
    throw Error(ErrorKind::ShapeMismatch, "compose: inner output " +
                                              shape_str(inner.out_) +
                                              " does not feed " +
                                              shape_str(in_));
  }
  // K1 conj(K2 x) = K1 conj(K2) conj(x): an outer conjugate-linear factor
  // conjugates the inner kernel and flips the flavor.
  if (is_complex_linear()) {
    return {inner.in_, out_, kernel_ * inner.kernel_, inner.linearity_};
  }
  const Linearity flavor = inner.is_complex_linear()
                               ? Linearity::conjugate_linear
                               : Linearity::complex_linear;
  return {inner.in_, out_, kernel_ * inner.kernel_.conjugate(), flavor};
}

SuperOperator SuperOperator::operator+(const SuperOperator& other) const {
  if (other.in_ != in_ || other.out_ != out_) {
    throw Error(ErrorKind::ShapeMismatch, "SuperOperator sum: shapes differ");
  }
  if (other.linearity_ != linearity_) {
    throw Error(ErrorKind::InvalidArgument,
                "SuperOperator sum: mixed linearity is only real-linear");
  }
  return {in_, out_, kernel_ + other.kernel_, linearity_};
}

SuperOperator SuperOperator::operator-(const SuperOperator& other) const {
  return *this + (-other);
}

SuperOperator SuperOperator::operator*(Complex scale) const {
  return {in_, out_, scale * kernel_, linearity_};
}

SuperOperator SuperOperator::operator-() const {
  return {in_, out_, -kernel_, linearity_};
}

Matrix super_apply(const SuperOperator& op, const Matrix& z) {
  return op.apply(z);
}

SuperOperator super_exp(const SuperOperator& op) {
  if (!op.is_complex_linear()) {
    throw Error(ErrorKind::ConjugateLinearInput,
                "super_exp: only complex-linear operators are exponentiated");
  }
  if (op.dim_in() != op.dim_out()) {
    throw Error(ErrorKind::ShapeMismatch, "super_exp: operator is not square");
  }
  return {op.dim_in(), op.dim_out(), mat_exp(op.kernel())};
}

SuperOperator commutator(const SuperOperator& a, const SuperOperator& b) {
  return a.compose(b) - b.compose(a);
}

}  // namespace jordangeo
