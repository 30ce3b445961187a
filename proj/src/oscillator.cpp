#include "operadix/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace operadix {

OscParams::OscParams(double omega_, double p0_) : omega(omega_), p0(p0_) {
  if (!std::isfinite(omega) || !(omega > 0.0)) {
    throw DomainError("oscillator frequency must be positive and finite");
  }
  if (!std::isfinite(p0) || p0 == 0.0) {
    throw DomainError("initial momentum must be nonzero and finite");
  }
}

double OscParams::period() const noexcept { return 2.0 * std::numbers::pi / omega; }

double hamiltonian(OscState s, double omega) noexcept {
  const double wq = omega * s.q;
  return 0.5 * (s.p * s.p + wq * wq);
}

OscState flow(const OscParams& params, double t) noexcept {
  const double phase = params.omega * t;
  return {params.p0 / params.omega * std::sin(phase), params.p0 * std::cos(phase)};
}

AuxPair aux_pointwise(OscState s, double omega, int sign_hint) {
  const double h = hamiltonian(s, omega);
  if (!(h > 0.0)) throw DomainError("auxiliary functions undefined at zero energy");
  const double sign = sign_hint < 0 ? -1.0 : 1.0;
  const double radius = std::hypot(s.p, omega * s.q);  // sqrt(2H)
  const double wq = omega * s.q;

  AuxPair out;
  if (s.p >= 0.0) {
    out.a_plus = sign * std::sqrt(radius + s.p);
    out.a_minus = wq / out.a_plus;
  } else {
    // radius + p cancels here; A- = sqrt(radius - p) is well conditioned.
    const double magnitude = std::sqrt(radius - s.p);
    const double sign_minus = wq == 0.0 ? sign : (wq > 0.0 ? sign : -sign);
    out.a_minus = sign_minus * magnitude;
    out.a_plus = wq / out.a_minus;
  }
  out.branch = AuxBranch::PointwisePositive;
  return out;
}

AuxPair aux_smooth(const OscParams& params, double t) {
  if (!(params.p0 > 0.0)) {
    throw DomainError("smooth auxiliary branch requires p0 > 0; use aux_pointwise");
  }
  const double scale = std::sqrt(2.0 * params.p0);
  const double half = 0.5 * params.omega * t;
  return {scale * std::cos(half), scale * std::sin(half), AuxBranch::SmoothTime};
}

AuxPair align_branch(const AuxPair& pair, const AuxPair& reference) noexcept {
  const double dot = pair.a_plus * reference.a_plus + pair.a_minus * reference.a_minus;
  return dot < 0.0 ? pair.negated() : pair;
}

double AuxResiduals::max() const noexcept { return std::max({sum, diff, product}); }

AuxResiduals aux_residuals(const AuxPair& aux, OscState s, double omega) {
  const double radius = std::hypot(s.p, omega * s.q);
  if (!(radius > 0.0)) throw DomainError("auxiliary functions undefined at zero energy");
  const double pp = aux.a_plus * aux.a_plus;
  const double mm = aux.a_minus * aux.a_minus;
  return {std::abs(pp + mm - 2.0 * radius) / (2.0 * radius),
          std::abs(pp - mm - 2.0 * s.p) / (2.0 * radius),
          std::abs(aux.a_plus * aux.a_minus - omega * s.q) / radius};
}

}  // namespace operadix
