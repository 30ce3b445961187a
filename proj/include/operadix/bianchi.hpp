#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "operadix/lax.hpp"
#include "operadix/multi_op.hpp"
#include "operadix/oscillator.hpp"

namespace operadix {

/// Bianchi types in table order. VII0 and VI0 are the alpha = 0 rows; VIIa,
/// IIIa1 and VIa are the alpha != 0 families (IIIa1 is VIa at a = 1).
enum class BianchiTag { I, II, VII0, VI0, IX, VIII, V, IV, VIIa, IIIa1, VIa };

inline constexpr std::array<BianchiTag, 11> kAllTags{
    BianchiTag::I,  BianchiTag::II,   BianchiTag::VII0, BianchiTag::VI0,
    BianchiTag::IX, BianchiTag::VIII, BianchiTag::V,    BianchiTag::IV,
    BianchiTag::VIIa, BianchiTag::IIIa1, BianchiTag::VIa};

/// Tag used on the command line and in JSON ("VII0", "VIIa", ...).
std::string_view tag_name(BianchiTag tag) noexcept;
/// Row label as printed in the tables ("VII", "VII_a", "III_a=1", ...).
std::string_view display_name(BianchiTag tag) noexcept;
/// Parses a tag name; "VII" and "VI" are accepted for VII0 and VI0.
std::optional<BianchiTag> parse_tag(std::string_view name) noexcept;
bool takes_parameter(BianchiTag tag) noexcept;

/// A Bianchi type with its parameter. `a` is present exactly for VIIa and VIa
/// (a > 0, and a != 1 for VIa); `parameter()` yields 1 for IIIa1.
class BianchiType {
 public:
  /// Throws DomainError on a missing, superfluous or out-of-range parameter.
  static BianchiType make(BianchiTag tag, std::optional<double> a = std::nullopt);

  BianchiTag tag() const noexcept { return tag_; }
  std::optional<double> a() const noexcept { return a_; }
  double parameter() const noexcept;
  std::string label() const;

  friend bool operator==(const BianchiType&, const BianchiType&) = default;

 private:
  BianchiType(BianchiTag tag, std::optional<double> a) : tag_(tag), a_(a) {}

  BianchiTag tag_;
  std::optional<double> a_;
};

/// Table entry of the form constant + a_coeff * a.
struct AffineEntry {
  int constant = 0;
  int a_coeff = 0;

  double eval(double a) const noexcept { return constant + a_coeff * a; }
  std::string symbol() const;
};

/// One row of the Bianchi table: structure parameters and the nine
/// independent structure constants, ordered
///   mu^1_12, mu^2_12, mu^3_12, mu^1_23, mu^2_23, mu^3_23, mu^1_31, mu^2_31, mu^3_31.
struct Table1Row {
  BianchiTag tag;
  AffineEntry alpha, n1, n2, n3;
  std::array<AffineEntry, 9> mu;
};

std::span<const Table1Row> table1() noexcept;
const Table1Row& table1_row(BianchiTag tag);

/// Zero-based (output, first input, second input) of the nine independent
/// components, in the order used by Table1Row::mu.
inline constexpr std::array<std::array<std::size_t, 3>, 9> kIndependentSlots{{
    {0, 0, 1}, {1, 0, 1}, {2, 0, 1},
    {0, 1, 2}, {1, 1, 2}, {2, 1, 2},
    {0, 2, 0}, {1, 2, 0}, {2, 2, 0},
}};

/// Reads the nine independent components of an antisymmetric binary operation.
std::array<double, 9> independent_components(const MultiOp& mu);

struct LieConstants {
  BianchiType type;
  MultiOp mu0;
};

LieConstants catalog(const BianchiType& type);

/// Inverts the initial-value system at (q, p) = (0, p0) with A+ = sqrt(2 p0),
/// A- = 0. Throws DomainError for p0 <= 0.
LaxCoefficients solve_coefficients(const LieConstants& lie, double p0);

/// The dynamical deformation mu(t) over the oscillator, on the smooth
/// auxiliary branch.
MultiOp deform(const BianchiType& type, const OscParams& params, double t);

/// Max over a two-period grid of 128 samples of |deform(t) - mu0|.
double deformation_amplitude(const BianchiType& type, const OscParams& params);

inline constexpr double kRigidityTolerance = 1e-10;

bool is_rigid(const BianchiType& type, const OscParams& params);

/// Symbolic Table 2 entries for a deformed type, in Table1Row::mu order.
/// Expressions use p, q, w (omega), p0, a, A+, A- and sqrt(...).
const std::array<std::string_view, 9>& table2_symbols(BianchiTag tag);

}  // namespace operadix
