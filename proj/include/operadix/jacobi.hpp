#pragma once

#include <array>
#include <optional>

#include "operadix/bianchi.hpp"
#include "operadix/multi_op.hpp"
#include "operadix/oscillator.hpp"

namespace operadix {

using Vec3 = std::array<double, 3>;

inline constexpr Vec3 kE1{1.0, 0.0, 0.0};
inline constexpr Vec3 kE2{0.0, 1.0, 0.0};
inline constexpr Vec3 kE3{0.0, 0.0, 1.0};

/// Cyclic sum [x,[y,z]] + [y,[z,x]] + [z,[x,y]] with [u,v] = mu(u (x) v).
Vec3 jacobiator(const MultiOp& mu, const Vec3& x, const Vec3& y, const Vec3& z);

/// det of the matrix with rows x, y, z.
double triple_product(const Vec3& x, const Vec3& y, const Vec3& z) noexcept;

/// Closed-form Jacobiator of the VIa, VIIa and IIIa1 (a = 1) deformations:
///   J^1 = -a (x,y,z) / sqrt(2 p0^3) [A- w q + A+ (p - p0)]
///   J^2 = -a (x,y,z) / sqrt(2 p0^3) [A+ w q - A- (p + p0)]
///   J^3 = 0
/// Valid at any phase-space point, on or off the energy level p0^2 / 2.
Vec3 jacobiator_closed_form(double a, OscState s, double omega, const AuxPair& aux, double p0,
                            double triple);

/// True for the three types whose deformed Jacobiator is the closed form
/// above (and need not vanish off-shell).
bool has_energy_dependent_jacobiator(BianchiTag tag) noexcept;

struct JacobiReport {
  Vec3 j_coeffs{};
  std::optional<Vec3> closed_form;
  double triple = 0.0;
};

/// Deformed product of `type` built at an arbitrary phase-space point with
/// the coefficients fixed by (omega, p0).
MultiOp deformed_product_at(const BianchiType& type, const OscParams& params, OscState s,
                            const AuxPair& aux);

/// Brute-force Jacobiator of the deformed product at `s`, plus the closed form
/// when the type has one.
JacobiReport jacobi_report(const BianchiType& type, const OscParams& params, OscState s,
                           const AuxPair& aux, const Vec3& x, const Vec3& y, const Vec3& z);

/// Max |J| over the basis triple (e1, e2, e3); by alternation and
/// multilinearity this bounds the whole Jacobiator up to |(x,y,z)|.
double basis_jacobiator_norm(const MultiOp& mu);

/// Outcome of solving the Jacobi-identity system
///   A- w q + A+ p = A+ p0,   A+ w q - A- p = A- p0
/// for (w q, p) by Cramer's rule.
struct EnergyCertificate {
  double system_residual = 0.0;  // max |lhs - rhs| of the two equations
  double delta = 0.0;            // -(A+^2 + A-^2)
  double delta_wq = 0.0;         // -2 A+ A- p0
  double delta_p = 0.0;          // (A-^2 - A+^2) p0
  double state_energy = 0.0;     // H at the given point
  /// p0 / sqrt(2H) as recovered from whichever Cramer line is better conditioned.
  std::optional<double> ratio;
  /// p0^2 / 2 when the system holds and the ratio is 1.
  std::optional<double> energy;
  bool indeterminate = false;

  bool certified() const noexcept { return energy.has_value(); }
};

inline constexpr double kSystemTolerance = 1e-10;
inline constexpr double kRatioTolerance = 1e-10;
inline constexpr double kDegenerateState = 1e-12;

/// Certifies H = p0^2 / 2 at a point where the Jacobi system holds.
/// Throws DomainError at H <= 0.
EnergyCertificate energy_from_jacobi(const AuxPair& aux, OscState s, double omega, double p0);

}  // namespace operadix
