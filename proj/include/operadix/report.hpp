#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "operadix/bianchi.hpp"
#include "operadix/multi_op.hpp"
#include "operadix/oscillator.hpp"
#include "operadix/sweep.hpp"

namespace operadix {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"dim": d, "arity": n, "coeffs": [{"i": i, "j": [j1, ...], "v": v}, ...]}
/// Only nonzero entries are listed; indices are 1-based.
json to_json(const MultiOp& op);
/// Inverse of to_json. Throws ShapeError on malformed input, naming the
/// offending entry.
MultiOp multi_op_from_json(const json& j);

/// MultiOp JSON of mu0 plus "bianchi" and, for VIIa / VIa, "a".
json catalog_json(const LieConstants& lie);

/// Shortest round-trip decimal with 17 significant digits, '.' separator,
/// independent of the C locale.
std::string format_17(double v);
/// 6 significant digits, locale independent; "-0" is printed as "0".
std::string format_6(double v);

/// CSV with header t,q,p,H,a_plus,a_minus along the smooth branch.
std::string trajectory_csv(const OscParams& params, std::span<const double> times);

/// Markdown reproduction of the Bianchi table: structure parameters and the
/// nine independent constants, with the family parameter printed as "a".
std::string table1_markdown();
/// Markdown reproduction of the symbolic table of deformed constants.
std::string table2_markdown();

/// Numeric deformation table for one type, one row per sample, 6 digits.
std::string deformation_markdown(const BianchiType& type,
                                 std::span<const TrajectorySample> samples);

}  // namespace operadix
