#pragma once

#include "operadix/error.hpp"

namespace operadix {

/// Frequency and initial momentum of a harmonic-oscillator trajectory that
/// starts at (q, p) = (0, p0). Energy E = p0^2 / 2.
struct OscParams {
  double omega;
  double p0;

  /// Throws DomainError unless omega > 0 and p0 != 0 (both finite).
  OscParams(double omega, double p0);

  double energy() const noexcept { return 0.5 * p0 * p0; }
  double period() const noexcept;
};

/// A phase-space point (q, p); may lie off the trajectory.
struct OscState {
  double q = 0.0;
  double p = 0.0;
};

enum class AuxBranch { PointwisePositive, SmoothTime };

/// Auxiliary functions A+ and A- of a phase-space point, defined up to an
/// overall sign by
///   A+^2 + A-^2 = 2 sqrt(2H),   A+^2 - A-^2 = 2p,   A+ A- = omega q.
struct AuxPair {
  double a_plus = 0.0;
  double a_minus = 0.0;
  AuxBranch branch = AuxBranch::PointwisePositive;

  AuxPair negated() const noexcept { return {-a_plus, -a_minus, branch}; }
};

/// H(q, p) = (p^2 + omega^2 q^2) / 2.
double hamiltonian(OscState s, double omega) noexcept;

/// Exact flow from (0, p0): q = (p0/omega) sin(omega t), p = p0 cos(omega t).
OscState flow(const OscParams& params, double t) noexcept;

/// Solves the defining relations of A+- at a single point.
///
/// sign_hint (+1 or -1) fixes the sign of A+. The larger of |A+|, |A-| is
/// taken from its square root and the other from A+ A- = omega q, which keeps
/// the pair accurate near A+ = 0. When omega q = 0 and p < 0 the pair is
/// (0, sign_hint * sqrt(2|p|)); which sign of A- belongs to the "positive"
/// branch there is a convention, not something the relations determine.
///
/// Throws DomainError at H <= 0.
AuxPair aux_pointwise(OscState s, double omega, int sign_hint);

/// Half-angle parametrization along the flow for p0 > 0:
///   A+ = sqrt(2 p0) cos(omega t / 2),  A- = sqrt(2 p0) sin(omega t / 2).
/// Smooth in t with period 4 pi / omega. Throws DomainError for p0 <= 0.
AuxPair aux_smooth(const OscParams& params, double t);

/// Returns `pair` or its negation, whichever is closer to `reference`.
AuxPair align_branch(const AuxPair& pair, const AuxPair& reference) noexcept;

/// Relative residuals of the three defining relations.
struct AuxResiduals {
  double sum;      // |A+^2 + A-^2 - 2 sqrt(2H)| / (2 sqrt(2H))
  double diff;     // |A+^2 - A-^2 - 2p| / (2 sqrt(2H))
  double product;  // |A+ A- - omega q| / sqrt(2H)

  double max() const noexcept;
};

AuxResiduals aux_residuals(const AuxPair& aux, OscState s, double omega);

}  // namespace operadix
