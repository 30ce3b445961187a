#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "operadix/error.hpp"

namespace operadix {

/// A multilinear operation f : V^{(x)n} -> V on V = R^d, stored densely.
///
/// Coefficients are indexed c[i][j1...jn] with
///   f(e_{j1} (x) ... (x) e_{jn}) = c[i][j1...jn] e_i,
/// i.e. output index first, then the inputs in slot order. The flat layout is
/// row-major over (i, j1, ..., jn). A matrix is an arity-1 operation whose
/// c[i][j] is its (row i, column j) entry; a binary product mu has
/// c[i][j][k] = mu^i_{jk}.
///
/// The reduced degree |f| = arity - 1 drives every sign in the graded
/// formulas; an arity-0 operation (a constant vector) has |f| = -1.
class MultiOp {
 public:
  MultiOp(std::size_t dim, std::size_t arity);

  static MultiOp identity(std::size_t dim);
  /// Arity-1 operation from a row-major d x d matrix.
  static MultiOp from_matrix(std::size_t dim, std::span<const double> rows);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t arity() const noexcept { return arity_; }
  int degree() const noexcept { return static_cast<int>(arity_) - 1; }
  /// Number of input multi-indices, d^arity.
  std::size_t stride() const noexcept { return stride_; }

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::span<double> coeffs() noexcept { return coeffs_; }

  /// Flat offset of c[out][in...]; throws ShapeError on a bad index.
  std::size_t offset(std::size_t out, std::span<const std::size_t> in) const;

  double at(std::size_t out, std::initializer_list<std::size_t> in) const {
    return coeffs_[offset(out, std::span(in.begin(), in.size()))];
  }
  double& at(std::size_t out, std::initializer_list<std::size_t> in) {
    return coeffs_[offset(out, std::span(in.begin(), in.size()))];
  }

  /// Sets c[i][j][k] = v and c[i][k][j] = -v (arity 2 only).
  void set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, double v);

  MultiOp& operator+=(const MultiOp& other);
  MultiOp& operator-=(const MultiOp& other);
  MultiOp& operator*=(double s);

  friend MultiOp operator+(MultiOp a, const MultiOp& b) { return a += b; }
  friend MultiOp operator-(MultiOp a, const MultiOp& b) { return a -= b; }
  friend MultiOp operator*(double s, MultiOp a) { return a *= s; }
  friend MultiOp operator*(MultiOp a, double s) { return a *= s; }

  friend bool operator==(const MultiOp&, const MultiOp&) = default;

  double max_abs() const noexcept;
  bool is_finite() const noexcept;

 private:
  void require_same_shape(const MultiOp& other) const;

  std::size_t dim_;
  std::size_t arity_;
  std::size_t stride_;
  std::vector<double> coeffs_;
};

/// Max-norm of a - b; shapes must agree.
double max_abs_diff(const MultiOp& a, const MultiOp& b);

/// d^n with overflow checking.
std::size_t int_pow(std::size_t d, std::size_t n);

}  // namespace operadix
