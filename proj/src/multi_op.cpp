#include "operadix/multi_op.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace operadix {

std::size_t int_pow(std::size_t d, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (d != 0 && r > std::numeric_limits<std::size_t>::max() / d) {
      throw ShapeError("operation too large: dim^arity overflows");
    }
    r *= d;
  }
  return r;
}

MultiOp::MultiOp(std::size_t dim, std::size_t arity)
    : dim_(dim), arity_(arity), stride_(0) {
  if (dim == 0) throw ShapeError("dimension must be positive");
  stride_ = int_pow(dim, arity);
  coeffs_.assign(dim * stride_, 0.0);
}

MultiOp MultiOp::identity(std::size_t dim) {
  MultiOp id(dim, 1);
  for (std::size_t i = 0; i < dim; ++i) id.coeffs_[i * dim + i] = 1.0;
  return id;
}

MultiOp MultiOp::from_matrix(std::size_t dim, std::span<const double> rows) {
  MultiOp m(dim, 1);
  if (rows.size() != dim * dim) {
    throw ShapeError("matrix needs dim*dim entries, got " + std::to_string(rows.size()));
  }
  std::copy(rows.begin(), rows.end(), m.coeffs_.begin());
  return m;
}

std::size_t MultiOp::offset(std::size_t out, std::span<const std::size_t> in) const {
  if (in.size() != arity_) {
    throw ShapeError("expected " + std::to_string(arity_) + " input indices, got " +
                         std::to_string(in.size()),
                     in.size());
  }
  if (out >= dim_) throw ShapeError("output index out of range", 0);
  std::size_t flat = out;
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (in[k] >= dim_) throw ShapeError("input index out of range", k + 1);
    flat = flat * dim_ + in[k];
  }
  return flat;
}

void MultiOp::set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, double v) {
  if (arity_ != 2) throw ShapeError("set_antisymmetric needs a binary operation");
  at(i, {j, k}) = v;
  at(i, {k, j}) = -v;
}

void MultiOp::require_same_shape(const MultiOp& other) const {
  if (dim_ != other.dim_) throw ShapeError("dimension mismatch");
  if (arity_ != other.arity_) throw ShapeError("arity mismatch");
}

MultiOp& MultiOp::operator+=(const MultiOp& other) {
  require_same_shape(other);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

MultiOp& MultiOp::operator-=(const MultiOp& other) {
  require_same_shape(other);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

MultiOp& MultiOp::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

double MultiOp::max_abs() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool MultiOp::is_finite() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return std::isfinite(c); });
}

double max_abs_diff(const MultiOp& a, const MultiOp& b) {
  if (a.dim() != b.dim()) throw ShapeError("dimension mismatch");
  if (a.arity() != b.arity()) throw ShapeError("arity mismatch");
  double m = 0.0;
  auto ca = a.coeffs();
  auto cb = b.coeffs();
  for (std::size_t n = 0; n < ca.size(); ++n) m = std::max(m, std::abs(ca[n] - cb[n]));
  return m;
}

}  // namespace operadix
