#include "operadix/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "operadix/lax.hpp"
#include "operadix/operad.hpp"

namespace operadix {

namespace {

Vec3 bracket(const MultiOp& mu, const Vec3& u, const Vec3& v) {
  const std::array<Vector, 2> args{Vector(u.begin(), u.end()), Vector(v.begin(), v.end())};
  const Vector r = operadix::apply(mu, args);
  return {r[0], r[1], r[2]};
}

}  // namespace

Vec3 jacobiator(const MultiOp& mu, const Vec3& x, const Vec3& y, const Vec3& z) {
  if (mu.dim() != 3) throw ShapeError("jacobiator: operation must act on R^3", mu.dim());
  if (mu.arity() != 2) throw ShapeError("jacobiator: operation must be binary", mu.arity());
  const Vec3 a = bracket(mu, x, bracket(mu, y, z));
  const Vec3 b = bracket(mu, y, bracket(mu, z, x));
  const Vec3 c = bracket(mu, z, bracket(mu, x, y));
  return {a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]};
}

double triple_product(const Vec3& x, const Vec3& y, const Vec3& z) noexcept {
  return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) +
         x[2] * (y[0] * z[1] - y[1] * z[0]);
}

Vec3 jacobiator_closed_form(double a, OscState s, double omega, const AuxPair& aux, double p0,
                            double triple) {
  if (!(p0 > 0.0)) throw DomainError("jacobiator_closed_form requires p0 > 0");
  const double wq = omega * s.q;
  const double prefactor = -a * triple / std::sqrt(2.0 * p0 * p0 * p0);
  return {prefactor * (aux.a_minus * wq + aux.a_plus * (s.p - p0)),
          prefactor * (aux.a_plus * wq - aux.a_minus * (s.p + p0)), 0.0};
}

bool has_energy_dependent_jacobiator(BianchiTag tag) noexcept {
  return tag == BianchiTag::VIIa || tag == BianchiTag::IIIa1 || tag == BianchiTag::VIa;
}

MultiOp deformed_product_at(const BianchiType& type, const OscParams& params, OscState s,
                            const AuxPair& aux) {
  const LaxCoefficients C = solve_coefficients(catalog(type), params.p0);
  return build_mu(C, s, params.omega, aux);
}

JacobiReport jacobi_report(const BianchiType& type, const OscParams& params, OscState s,
                           const AuxPair& aux, const Vec3& x, const Vec3& y, const Vec3& z) {
  const MultiOp mu = deformed_product_at(type, params, s, aux);
  JacobiReport report;
  report.j_coeffs = jacobiator(mu, x, y, z);
  report.triple = triple_product(x, y, z);
  if (has_energy_dependent_jacobiator(type.tag())) {
    report.closed_form = jacobiator_closed_form(type.parameter(), s, params.omega, aux,
                                                params.p0, report.triple);
  }
  return report;
}

double basis_jacobiator_norm(const MultiOp& mu) {
  const Vec3 j = jacobiator(mu, kE1, kE2, kE3);
  return std::max({std::abs(j[0]), std::abs(j[1]), std::abs(j[2])});
}

EnergyCertificate energy_from_jacobi(const AuxPair& aux, OscState s, double omega, double p0) {
  EnergyCertificate out;
  out.state_energy = hamiltonian(s, omega);
  if (!(out.state_energy > 0.0)) throw DomainError("energy_from_jacobi requires H > 0");

  const double ap = aux.a_plus;
  const double am = aux.a_minus;
  const double wq = omega * s.q;
  const double r1 = am * wq + ap * s.p - ap * p0;
  const double r2 = ap * wq - am * s.p - am * p0;
  const double scale = std::max(1.0, (std::abs(ap) + std::abs(am)) * std::abs(p0));
  out.system_residual = std::max(std::abs(r1), std::abs(r2));

  // | A-  A+ |        | A+ p0   A+ |        | A-  A+ p0 |
  // | A+ -A- |,       | A- p0  -A- |,       | A+  A- p0 |
  out.delta = -am * am - ap * ap;
  out.delta_wq = -2.0 * ap * am * p0;
  out.delta_p = am * am * p0 - ap * ap * p0;

  if (std::abs(s.q) < kDegenerateState && std::abs(s.p) < kDegenerateState) {
    out.indeterminate = true;
    return out;
  }
  const double wq_solved = out.delta_wq / out.delta;
  const double p_solved = out.delta_p / out.delta;
  out.ratio = std::abs(wq) >= std::abs(s.p) ? wq_solved / wq : p_solved / s.p;

  if (out.system_residual <= kSystemTolerance * scale &&
      std::abs(*out.ratio - 1.0) <= kRatioTolerance) {
    out.energy = 0.5 * p0 * p0;
  }
  return out;
}

}  // namespace operadix
