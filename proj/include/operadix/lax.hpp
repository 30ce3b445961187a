#pragma once

#include <array>
#include <cstddef>

#include "operadix/multi_op.hpp"
#include "operadix/oscillator.hpp"

namespace operadix {

/// The nine real parameters C1..C9 of the 3D binary anti-commutative operadic
/// Lax family. Degenerate vectors (C2 = C3 = C5 = C6 = C7 = C8 = 0) are
/// legal values; `nondegenerate()` reports them so callers can decide.
struct LaxCoefficients {
  std::array<double, 9> c{};

  /// 1-based access, nu in [1, 9].
  double operator()(std::size_t nu) const { return c.at(nu - 1); }
  double& operator()(std::size_t nu) { return c.at(nu - 1); }

  bool nondegenerate() const noexcept;

  friend bool operator==(const LaxCoefficients&, const LaxCoefficients&) = default;
};

/// L = (p, wq, 0; wq, -p, 0; 0, 0, 1).
MultiOp lax_L(OscState s, double omega);

/// dL/dt along the Hamilton equations: (-w^2 q, w p, 0; w p, w^2 q, 0; 0, 0, 0).
MultiOp lax_L_dot(OscState s, double omega);

/// M = (omega/2) (0, -1, 0; 1, 0, 0; 0, 0, 0). Throws DomainError for omega <= 0.
MultiOp lax_M(double omega);

/// max |dL/dt - (ML - LM)| at flow(params, t).
double ordinary_lax_residual(const OscParams& params, double t);

/// [M, mu] from the index formula
///   mu'^i_{jk} = mu^s_{jk} M^i_s - M^s_j mu^i_{sk} - M^s_k mu^i_{js}.
/// Requires mu of arity 2 and M of arity 1 over the same space.
MultiOp evolution_rhs(const MultiOp& mu, const MultiOp& M);

/// The anti-commutative multiplication of the Lax family at a phase-space
/// point. Throws DomainError if `aux` violates its defining relations at `s`
/// by more than 1e-8 (relative).
MultiOp build_mu(const LaxCoefficients& C, OscState s, double omega, const AuxPair& aux);

/// Same as build_mu without the auxiliary-pair consistency check.
MultiOp build_mu_unchecked(const LaxCoefficients& C, OscState s, double omega,
                           const AuxPair& aux) noexcept;

/// Default time step for finite differences, 1e-4 / omega.
double default_time_step(double omega) noexcept;

/// max over coefficients of |dmu/dt - [M, mu]| at time t, with dmu/dt taken as
/// the central difference of t -> build_mu(C, flow(t), aux_smooth(t)).
/// Requires h > 0 and p0 > 0.
double operadic_lax_residual(const LaxCoefficients& C, const OscParams& params, double t,
                             double h);

/// Phase-space form of the operadic Lax equation,
///   p dmu/dq - w^2 q dmu/dp = [M, mu],
/// evaluated at flow(params, t) with central differences in q and p of steps
/// `rel_step * max(|q|, |p|, 1)`. The auxiliary pair at every stencil point is
/// the pointwise solution aligned with the smooth branch at t.
double phase_space_lax_residual(const LaxCoefficients& C, const OscParams& params, double t,
                                double rel_step = 1e-5);

}  // namespace operadix
