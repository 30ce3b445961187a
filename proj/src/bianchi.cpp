#include "operadix/bianchi.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <numbers>

#include "operadix/error.hpp"

namespace operadix {

namespace {

constexpr AffineEntry k(int c) { return {c, 0}; }
constexpr AffineEntry ka(int coeff) { return {0, coeff}; }

// clang-format off
constexpr std::array<Table1Row, 11> kTable1{{
  //  tag                alpha   n1    n2     n3      12^1  12^2    12^3   23^1  23^2  23^3   31^1  31^2  31^3
  {BianchiTag::I,     k(0),   k(0), k(0),  k(0),  {k(0), k(0),   k(0),  k(0), k(0), k(0),  k(0), k(0),  k(0)}},
  {BianchiTag::II,    k(0),   k(1), k(0),  k(0),  {k(0), k(0),   k(0),  k(1), k(0), k(0),  k(0), k(0),  k(0)}},
  {BianchiTag::VII0,  k(0),   k(1), k(1),  k(0),  {k(0), k(0),   k(0),  k(1), k(0), k(0),  k(0), k(1),  k(0)}},
  {BianchiTag::VI0,   k(0),   k(1), k(-1), k(0),  {k(0), k(0),   k(0),  k(1), k(0), k(0),  k(0), k(-1), k(0)}},
  {BianchiTag::IX,    k(0),   k(1), k(1),  k(1),  {k(0), k(0),   k(1),  k(1), k(0), k(0),  k(0), k(1),  k(0)}},
  {BianchiTag::VIII,  k(0),   k(1), k(1),  k(-1), {k(0), k(0),   k(-1), k(1), k(0), k(0),  k(0), k(1),  k(0)}},
  {BianchiTag::V,     k(1),   k(0), k(0),  k(0),  {k(0), k(-1),  k(0),  k(0), k(0), k(0),  k(0), k(0),  k(1)}},
  {BianchiTag::IV,    k(1),   k(0), k(0),  k(1),  {k(0), k(-1),  k(1),  k(0), k(0), k(0),  k(0), k(0),  k(1)}},
  {BianchiTag::VIIa,  ka(1),  k(0), k(1),  k(1),  {k(0), ka(-1), k(1),  k(0), k(0), k(0),  k(0), k(1),  ka(1)}},
  {BianchiTag::IIIa1, k(1),   k(0), k(1),  k(-1), {k(0), k(-1),  k(-1), k(0), k(0), k(0),  k(0), k(1),  k(1)}},
  {BianchiTag::VIa,   ka(1),  k(0), k(1),  k(-1), {k(0), ka(-1), k(-1), k(0), k(0), k(0),  k(0), k(1),  ka(1)}},
}};

using Row2 = std::array<std::string_view, 9>;
constexpr std::array<Row2, 11> kTable2{{
  {"0", "0", "0", "0", "0", "0", "0", "0", "0"},
  {"0", "0", "0", "(p+p0)/(2p0)", "wq/(2p0)", "0", "wq/(2p0)", "(p-p0)/(-2p0)", "0"},
  {"0", "0", "0", "1", "0", "0", "0", "1", "0"},
  {"0", "0", "0", "p/p0", "wq/p0", "0", "wq/p0", "-p/p0", "0"},
  {"0", "0", "1", "1", "0", "0", "0", "1", "0"},
  {"0", "0", "-1", "1", "0", "0", "0", "1", "0"},
  {"A-/sqrt(2p0)", "-A+/sqrt(2p0)", "0", "0", "0", "-A-/sqrt(2p0)", "0", "0", "A+/sqrt(2p0)"},
  {"A-/sqrt(2p0)", "-A+/sqrt(2p0)", "1", "0", "0", "-A-/sqrt(2p0)", "0", "0", "A+/sqrt(2p0)"},
  {"aA-/sqrt(2p0)", "-aA+/sqrt(2p0)", "1", "(p-p0)/(-2p0)", "wq/(-2p0)", "-aA-/sqrt(2p0)",
   "wq/(-2p0)", "(p+p0)/(2p0)", "aA+/sqrt(2p0)"},
  {"A-/sqrt(2p0)", "-A+/sqrt(2p0)", "-1", "(p-p0)/(-2p0)", "wq/(-2p0)", "-A-/sqrt(2p0)",
   "wq/(-2p0)", "(p+p0)/(2p0)", "A+/sqrt(2p0)"},
  {"aA-/sqrt(2p0)", "-aA+/sqrt(2p0)", "-1", "(p-p0)/(-2p0)", "wq/(-2p0)", "-aA-/sqrt(2p0)",
   "wq/(-2p0)", "(p+p0)/(2p0)", "aA+/sqrt(2p0)"},
}};
// clang-format on

std::size_t position(BianchiTag tag) noexcept { return static_cast<std::size_t>(tag); }

constexpr int kRigidityGrid = 128;

}  // namespace

std::string_view tag_name(BianchiTag tag) noexcept {
  constexpr std::array<std::string_view, 11> names{"I", "II", "VII0", "VI0", "IX", "VIII",
                                                   "V", "IV", "VIIa", "IIIa1", "VIa"};
  return names[position(tag)];
}

std::string_view display_name(BianchiTag tag) noexcept {
  constexpr std::array<std::string_view, 11> names{"I", "II", "VII", "VI", "IX", "VIII",
                                                   "V", "IV", "VII_a", "III_a=1", "VI_a!=1"};
  return names[position(tag)];
}

std::optional<BianchiTag> parse_tag(std::string_view name) noexcept {
  if (name == "VII") return BianchiTag::VII0;
  if (name == "VI") return BianchiTag::VI0;
  for (BianchiTag tag : kAllTags) {
    if (tag_name(tag) == name) return tag;
  }
  return std::nullopt;
}

bool takes_parameter(BianchiTag tag) noexcept {
  return tag == BianchiTag::VIIa || tag == BianchiTag::VIa;
}

BianchiType BianchiType::make(BianchiTag tag, std::optional<double> a) {
  if (!takes_parameter(tag)) {
    if (a) throw DomainError(std::string("type ") + std::string(tag_name(tag)) +
                             " takes no parameter");
    return {tag, std::nullopt};
  }
  if (!a) throw DomainError(std::string("type ") + std::string(tag_name(tag)) +
                            " requires a parameter a > 0");
  if (!std::isfinite(*a) || !(*a > 0.0)) throw DomainError("parameter a must be positive");
  if (tag == BianchiTag::VIa && *a == 1.0) {
    throw DomainError("VIa with a = 1 is type IIIa1; use IIIa1");
  }
  return {tag, a};
}

double BianchiType::parameter() const noexcept {
  if (a_) return *a_;
  return tag_ == BianchiTag::IIIa1 ? 1.0 : 0.0;
}

std::string BianchiType::label() const {
  std::string out(tag_name(tag_));
  if (a_) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "(a=%g)", *a_);
    out += buf;
  }
  return out;
}

std::string AffineEntry::symbol() const {
  if (a_coeff == 0) return std::to_string(constant);
  std::string a_part = a_coeff == 1 ? "a" : a_coeff == -1 ? "-a" : std::to_string(a_coeff) + "a";
  if (constant == 0) return a_part;
  return std::to_string(constant) + (a_coeff > 0 ? "+" : "") + a_part;
}

std::span<const Table1Row> table1() noexcept { return kTable1; }

const Table1Row& table1_row(BianchiTag tag) { return kTable1.at(position(tag)); }

std::array<double, 9> independent_components(const MultiOp& mu) {
  if (mu.dim() != 3 || mu.arity() != 2) {
    throw ShapeError("independent_components needs a binary operation on R^3");
  }
  std::array<double, 9> out{};
  for (std::size_t n = 0; n < 9; ++n) {
    const auto& [i, j, kk] = kIndependentSlots[n];
    out[n] = mu.at(i, {j, kk});
  }
  return out;
}

LieConstants catalog(const BianchiType& type) {
  const Table1Row& row = table1_row(type.tag());
  const double a = type.parameter();
  MultiOp mu0(3, 2);
  for (std::size_t n = 0; n < 9; ++n) {
    const auto& [i, j, kk] = kIndependentSlots[n];
    mu0.set_antisymmetric(i, j, kk, row.mu[n].eval(a));
  }
  return {type, std::move(mu0)};
}

LaxCoefficients solve_coefficients(const LieConstants& lie, double p0) {
  if (!(p0 > 0.0)) throw DomainError("solve_coefficients: only the p0 > 0 branch is implemented");
  const MultiOp& m = lie.mu0;
  // One-based accessor m^i_{jk}; the "13" variables are read through
  // antisymmetry from the stored "31" slots.
  auto g = [&m](std::size_t i, std::size_t j, std::size_t kk) {
    return m.at(i - 1, {j - 1, kk - 1});
  };
  const double root = std::sqrt(2.0 * p0);
  LaxCoefficients C;
  C(1) = 0.5 * (g(2, 2, 3) - g(1, 3, 1));
  C(2) = (g(2, 1, 3) + g(1, 2, 3)) / (2.0 * p0);
  C(3) = (g(2, 2, 3) + g(1, 3, 1)) / (2.0 * p0);
  C(4) = 0.5 * (g(2, 1, 3) - g(1, 2, 3));
  C(5) = g(1, 1, 2) / root;
  C(6) = -g(2, 1, 2) / root;
  C(7) = g(3, 1, 3) / root;
  C(8) = -g(3, 2, 3) / root;
  C(9) = g(3, 1, 2);
  return C;
}

MultiOp deform(const BianchiType& type, const OscParams& params, double t) {
  const LaxCoefficients C = solve_coefficients(catalog(type), params.p0);
  return build_mu(C, flow(params, t), params.omega, aux_smooth(params, t));
}

double deformation_amplitude(const BianchiType& type, const OscParams& params) {
  const LieConstants lie = catalog(type);
  const LaxCoefficients C = solve_coefficients(lie, params.p0);
  const double span = 2.0 * params.period();
  double worst = 0.0;
  for (int n = 0; n < kRigidityGrid; ++n) {
    const double t = span * n / kRigidityGrid;
    const MultiOp mu = build_mu(C, flow(params, t), params.omega, aux_smooth(params, t));
    worst = std::max(worst, max_abs_diff(mu, lie.mu0));
  }
  return worst;
}

bool is_rigid(const BianchiType& type, const OscParams& params) {
  return deformation_amplitude(type, params) < kRigidityTolerance;
}

const std::array<std::string_view, 9>& table2_symbols(BianchiTag tag) {
  return kTable2.at(position(tag));
}

}  // namespace operadix
