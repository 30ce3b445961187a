#include "operadix/operad.hpp"

#include <string>

namespace operadix {

Vector apply(const MultiOp& f, std::span<const Vector> args) {
  const std::size_t d = f.dim();
  if (args.size() != f.arity()) {
    throw ShapeError("operation of arity " + std::to_string(f.arity()) + " applied to " +
                         std::to_string(args.size()) + " arguments",
                     args.size());
  }
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k].size() != d) {
      throw ShapeError("argument has length " + std::to_string(args[k].size()) +
                           ", expected " + std::to_string(d),
                       k);
    }
  }

  // Contract the trailing input first: each pass folds one argument into a
  // tensor with one fewer input slot.
  std::vector<double> work(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t k = args.size(); k-- > 0;) {
    const Vector& x = args[k];
    const std::size_t outer = work.size() / d;
    std::vector<double> next(outer, 0.0);
    for (std::size_t o = 0; o < outer; ++o) {
      double acc = 0.0;
      for (std::size_t j = 0; j < d; ++j) acc += work[o * d + j] * x[j];
      next[o] = acc;
    }
    work = std::move(next);
  }
  return Vector(work.begin(), work.end());
}

MultiOp partial_compose(const MultiOp& f, const MultiOp& g, std::size_t slot) {
  if (f.dim() != g.dim()) throw ShapeError("partial_compose: dimension mismatch");
  if (f.arity() == 0 || slot > f.arity() - 1) {
    throw ShapeError("partial_compose: slot outside [0, |f|]", slot);
  }
  const std::size_t d = f.dim();
  const std::size_t m = f.arity();
  const std::size_t n = g.arity();
  MultiOp out(d, m + n - 1);

  // Result inputs split as (prefix | middle | suffix) with i, n and m-1-i
  // digits; f sees (prefix | s | suffix), g sees (middle).
  const std::size_t prefix_count = int_pow(d, slot);
  const std::size_t suffix_count = int_pow(d, m - 1 - slot);
  const std::size_t middle_count = g.stride();
  const double sign = parity_sign(static_cast<long long>(slot), g.degree());

  auto fc = f.coeffs();
  auto gc = g.coeffs();
  auto rc = out.coeffs();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t pre = 0; pre < prefix_count; ++pre) {
      for (std::size_t mid = 0; mid < middle_count; ++mid) {
        for (std::size_t suf = 0; suf < suffix_count; ++suf) {
          double acc = 0.0;
          for (std::size_t s = 0; s < d; ++s) {
            const std::size_t fi = ((a * prefix_count + pre) * d + s) * suffix_count + suf;
            const std::size_t gi = s * middle_count + mid;
            acc += fc[fi] * gc[gi];
          }
          const std::size_t ri =
              ((a * prefix_count + pre) * middle_count + mid) * suffix_count + suf;
          rc[ri] = sign * acc;
        }
      }
    }
  }
  return out;
}

MultiOp total_compose(const MultiOp& f, const MultiOp& g) {
  if (f.dim() != g.dim()) throw ShapeError("total_compose: dimension mismatch");
  if (f.arity() == 0) throw ShapeError("total_compose: f must have arity >= 1");
  MultiOp sum = partial_compose(f, g, 0);
  for (std::size_t i = 1; i < f.arity(); ++i) sum += partial_compose(f, g, i);
  return sum;
}

MultiOp gerstenhaber_bracket(const MultiOp& f, const MultiOp& g) {
  if (f.dim() != g.dim()) throw ShapeError("gerstenhaber_bracket: dimension mismatch");
  if (f.arity() + g.arity() == 0) {
    throw ShapeError("gerstenhaber_bracket: two constants have no bracket");
  }
  // An arity-0 operand has no input slots, so its total composition is the
  // empty sum.
  const std::size_t arity = f.arity() + g.arity() - 1;
  MultiOp fg = f.arity() > 0 ? total_compose(f, g) : MultiOp(f.dim(), arity);
  MultiOp gf = g.arity() > 0 ? total_compose(g, f) : MultiOp(f.dim(), arity);
  if (parity_sign(f.degree(), g.degree()) > 0) {
    fg -= gf;
  } else {
    fg += gf;
  }
  return fg;
}

}  // namespace operadix
