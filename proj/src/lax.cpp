#include "operadix/lax.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "operadix/operad.hpp"

namespace operadix {

namespace {

constexpr double kAuxConsistency = 1e-8;

}  // namespace

bool LaxCoefficients::nondegenerate() const noexcept {
  const double s = c[1] * c[1] + c[2] * c[2] + c[4] * c[4] + c[5] * c[5] + c[6] * c[6] +
                   c[7] * c[7];
  return s != 0.0;
}

MultiOp lax_L(OscState s, double omega) {
  const double wq = omega * s.q;
  const std::array<double, 9> m{s.p, wq, 0.0, wq, -s.p, 0.0, 0.0, 0.0, 1.0};
  return MultiOp::from_matrix(3, m);
}

MultiOp lax_L_dot(OscState s, double omega) {
  const double w2q = omega * omega * s.q;
  const double wp = omega * s.p;
  const std::array<double, 9> m{-w2q, wp, 0.0, wp, w2q, 0.0, 0.0, 0.0, 0.0};
  return MultiOp::from_matrix(3, m);
}

MultiOp lax_M(double omega) {
  if (!(omega > 0.0)) throw DomainError("lax_M: omega must be positive");
  const double h = 0.5 * omega;
  const std::array<double, 9> m{0.0, -h, 0.0, h, 0.0, 0.0, 0.0, 0.0, 0.0};
  return MultiOp::from_matrix(3, m);
}

double ordinary_lax_residual(const OscParams& params, double t) {
  const OscState s = flow(params, t);
  // For two arity-1 operations the Gerstenhaber bracket is ML - LM.
  const MultiOp commutator = gerstenhaber_bracket(lax_M(params.omega), lax_L(s, params.omega));
  return max_abs_diff(lax_L_dot(s, params.omega), commutator);
}

MultiOp evolution_rhs(const MultiOp& mu, const MultiOp& M) {
  if (mu.arity() != 2) throw ShapeError("evolution_rhs: mu must be binary", mu.arity());
  if (M.arity() != 1) throw ShapeError("evolution_rhs: M must be linear", M.arity());
  if (mu.dim() != M.dim()) throw ShapeError("evolution_rhs: dimension mismatch");
  const std::size_t n = mu.dim();
  MultiOp out(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t s = 0; s < n; ++s) {
          acc += mu.at(s, {j, k}) * M.at(i, {s});
          acc -= M.at(s, {j}) * mu.at(i, {s, k});
          acc -= M.at(s, {k}) * mu.at(i, {j, s});
        }
        out.at(i, {j, k}) = acc;
      }
    }
  }
  return out;
}

MultiOp build_mu_unchecked(const LaxCoefficients& C, OscState s, double omega,
                           const AuxPair& aux) noexcept {
  const double p = s.p;
  const double wq = omega * s.q;
  const double ap = aux.a_plus;
  const double am = aux.a_minus;
  MultiOp mu(3, 2);
  // Zero-based: e1, e2, e3 -> 0, 1, 2. Diagonal entries stay zero.
  mu.set_antisymmetric(0, 1, 2, C(2) * p - C(3) * wq - C(4));
  mu.set_antisymmetric(1, 0, 2, C(2) * p - C(3) * wq + C(4));
  mu.set_antisymmetric(0, 2, 0, C(2) * wq + C(3) * p - C(1));
  mu.set_antisymmetric(1, 1, 2, C(2) * wq + C(3) * p + C(1));
  mu.set_antisymmetric(0, 0, 1, C(5) * ap + C(6) * am);
  mu.set_antisymmetric(1, 0, 1, C(5) * am - C(6) * ap);
  mu.set_antisymmetric(2, 0, 2, C(7) * ap + C(8) * am);
  mu.set_antisymmetric(2, 1, 2, C(7) * am - C(8) * ap);
  mu.set_antisymmetric(2, 0, 1, C(9));
  return mu;
}

MultiOp build_mu(const LaxCoefficients& C, OscState s, double omega, const AuxPair& aux) {
  if (aux_residuals(aux, s, omega).max() > kAuxConsistency) {
    throw DomainError("inconsistent auxiliary pair");
  }
  return build_mu_unchecked(C, s, omega, aux);
}

double default_time_step(double omega) noexcept { return 1e-4 / omega; }

double operadic_lax_residual(const LaxCoefficients& C, const OscParams& params, double t,
                             double h) {
  if (!(h > 0.0)) throw DomainError("operadic_lax_residual: step must be positive");
  auto mu_at = [&](double time) {
    return build_mu_unchecked(C, flow(params, time), params.omega, aux_smooth(params, time));
  };
  MultiOp derivative = mu_at(t + h);
  derivative -= mu_at(t - h);
  derivative *= 1.0 / (2.0 * h);
  return max_abs_diff(derivative, evolution_rhs(mu_at(t), lax_M(params.omega)));
}

double phase_space_lax_residual(const LaxCoefficients& C, const OscParams& params, double t,
                                double rel_step) {
  const double w = params.omega;
  const OscState s = flow(params, t);
  const AuxPair reference = aux_smooth(params, t);
  auto mu_at = [&](OscState x) {
    const AuxPair aux = align_branch(aux_pointwise(x, w, 1), reference);
    return build_mu_unchecked(C, x, w, aux);
  };
  const double step = rel_step * std::max({std::abs(s.q), std::abs(s.p), 1.0});

  MultiOp d_dq = mu_at({s.q + step, s.p});
  d_dq -= mu_at({s.q - step, s.p});
  d_dq *= 1.0 / (2.0 * step);
  MultiOp d_dp = mu_at({s.q, s.p + step});
  d_dp -= mu_at({s.q, s.p - step});
  d_dp *= 1.0 / (2.0 * step);

  MultiOp lhs = s.p * d_dq;
  lhs -= (w * w * s.q) * d_dp;
  return max_abs_diff(lhs, evolution_rhs(mu_at(s), lax_M(w)));
}

}  // namespace operadix
