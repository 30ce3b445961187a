#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "operadix/multi_op.hpp"

namespace operadix {

using Vector = std::vector<double>;

/// Evaluates f(args[0] (x) ... (x) args[n-1]).
/// Throws ShapeError naming the offending argument on arity or length mismatch.
Vector apply(const MultiOp& f, std::span<const Vector> args);

/// Partial composition f o_i g: g's output is fed into input slot i of f,
/// with sign (-1)^{i|g|}. Requires 0 <= i <= |f|. The result has arity
/// f.arity() + g.arity() - 1 and its inputs are f's first i inputs, then g's
/// inputs, then f's remaining inputs.
MultiOp partial_compose(const MultiOp& f, const MultiOp& g, std::size_t slot);

/// Total composition f * g = sum_{i=0}^{|f|} f o_i g. Requires f.arity() >= 1.
MultiOp total_compose(const MultiOp& f, const MultiOp& g);

/// Gerstenhaber bracket [f, g] = f * g - (-1)^{|f||g|} g * f.
MultiOp gerstenhaber_bracket(const MultiOp& f, const MultiOp& g);

/// +1 or -1 for (-1)^{a*b}, by integer parity.
constexpr int parity_sign(long long a, long long b) noexcept {
  long long prod = a * b;
  return (prod % 2 == 0) ? 1 : -1;
}

}  // namespace operadix
