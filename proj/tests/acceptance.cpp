// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "operadix/bianchi.hpp"
#include "operadix/jacobi.hpp"
#include "operadix/lax.hpp"
#include "operadix/operad.hpp"
#include "operadix/report.hpp"
#include "operadix/sweep.hpp"
#include "support/oracles.hpp"

using namespace operadix;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_s;
  std::function<Outcome()> body;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<BianchiType> all_types(double a) {
  std::vector<BianchiType> out;
  for (BianchiTag tag : kAllTags) {
    out.push_back(BianchiType::make(tag, takes_parameter(tag) ? std::optional(a) : std::nullopt));
  }
  return out;
}

bool is_rigid_tag(BianchiTag tag) {
  return tag == BianchiTag::I || tag == BianchiTag::VII0 || tag == BianchiTag::VIII ||
         tag == BianchiTag::IX;
}

Outcome table1_reproduction() {
  const std::string golden = read_file(OPERADIX_GOLDEN_DIR "/table1.md");
  Outcome o;
  if (golden.empty()) return {false, "golden missing"};
  o.pass = table1_markdown() == golden;
  int rows = 0;
  for (const BianchiType& type : all_types(0.5)) {
    const Table1Row& row = table1_row(type.tag());
    const auto got = independent_components(catalog(type).mu0);
    bool ok = true;
    for (std::size_t k = 0; k < 9; ++k) ok = ok && got[k] == row.mu[k].eval(type.parameter());
    rows += ok ? 1 : 0;
  }
  o.pass = o.pass && rows == 11;
  o.detail = std::to_string(rows) + "/11 rows exact, markdown " +
             (table1_markdown() == golden ? "matches golden" : "differs from golden");
  return o;
}

Outcome table2_reproduction() {
  const double omega = 1.0, p0 = 2.0;
  const OscParams params(omega, p0);
  double worst = 0.0;
  int checked = 0;
  for (double a : {0.5, 1.0, 2.0}) {
    for (BianchiTag tag : kAllTags) {
      if (tag == BianchiTag::VIa && a == 1.0) continue;  // that is IIIa1
      const auto type =
          BianchiType::make(tag, takes_parameter(tag) ? std::optional(a) : std::nullopt);
      const auto& symbols = table2_symbols(tag);
      for (int n = 0; n < 32; ++n) {
        const double t = 2 * params.period() * n / 32.0;
        const std::map<std::string, double> vars{
            {"p", p0 * std::cos(omega * t)},
            {"q", p0 / omega * std::sin(omega * t)},
            {"w", omega},
            {"p0", p0},
            {"a", type.parameter()},
            {"A+", std::sqrt(2 * p0) * std::cos(omega * t / 2)},
            {"A-", std::sqrt(2 * p0) * std::sin(omega * t / 2)}};
        const auto got = independent_components(deform(type, params, t));
        for (std::size_t k = 0; k < 9; ++k) {
          worst = std::max(worst, std::abs(got[k] - oracle::eval_expression(symbols[k], vars)));
          ++checked;
        }
      }
    }
  }
  return {worst < 1e-12, std::to_string(checked) + " coefficients, max dev " + fmt(worst)};
}

Outcome ordinary_lax() {
  double worst = 0.0;
  for (double omega : {0.5, 1.0, 3.0})
    for (double p0 : {1.0, 2.0}) {
      const OscParams params(omega, p0);
      for (const LaxSample& s :
           lax_residuals(LaxCoefficients{}, params, two_period_grid(params, 100), 1e-4,
                         Execution::Parallel)) {
        worst = std::max(worst, s.ordinary);
      }
    }
  return {worst < 1e-12, "max residual " + fmt(worst)};
}

Outcome operadic_lax() {
  const OscParams params(1.0, 2.0);
  const auto times = two_period_grid(params, 64);
  const double h = default_time_step(params.omega);
  double worst = 0.0;
  double ratio_lo = 1e300, ratio_hi = 0.0;
  bool ratios_ok = true;
  for (const BianchiType& type : all_types(0.5)) {
    const LaxCoefficients C = solve_coefficients(catalog(type), params.p0);
    for (const LaxSample& s : lax_residuals(C, params, times, h, Execution::Parallel)) {
      worst = std::max(worst, s.operadic);
    }
    const ConvergenceMeasure m = operadic_convergence(C, params, times, 1e-3, Execution::Parallel);
    if (is_rigid_tag(type.tag())) continue;
    if (!m.ratio) {
      ratios_ok = false;
      continue;
    }
    ratio_lo = std::min(ratio_lo, *m.ratio);
    ratio_hi = std::max(ratio_hi, *m.ratio);
    ratios_ok = ratios_ok && *m.ratio >= 3.5 && *m.ratio <= 4.5;
  }
  return {worst < 1e-6 && ratios_ok, "max residual " + fmt(worst) + " at h=1e-4/w, ratio in [" +
                                         fmt(ratio_lo) + ", " + fmt(ratio_hi) + "]"};
}

Outcome rigidity() {
  const OscParams params(1.0, 2.0);
  const MultiOp M = lax_M(params.omega);
  bool ok = true;
  std::string rigid;
  double worst_rhs = 0.0;
  for (const BianchiType& type : all_types(0.5)) {
    const bool r = is_rigid(type, params);
    if (r) rigid += (rigid.empty() ? "" : ",") + std::string(tag_name(type.tag()));
    ok = ok && r == is_rigid_tag(type.tag());
    if (is_rigid_tag(type.tag())) {
      const double rhs = evolution_rhs(catalog(type).mu0, M).max_abs();
      worst_rhs = std::max(worst_rhs, rhs);
      ok = ok && rhs < 1e-15;
    }
  }
  return {ok, "rigid {" + rigid + "}, max |[M,mu0]| " + fmt(worst_rhs)};
}

Outcome dynamical_lie() {
  const OscParams params(1.0, 2.0);
  const auto times = two_period_grid(params, 64);
  Sampler sampler(kDefaultSeed);
  const auto triples = random_triples(50, sampler);
  double worst = 0.0;
  int deformed = 0;
  for (const BianchiType& type : all_types(0.5)) {
    if (is_rigid_tag(type.tag())) continue;
    ++deformed;
    for (double j : on_shell_jacobiators(type, params, times, triples, Execution::Parallel)) {
      worst = std::max(worst, j);
    }
  }
  return {worst < 1e-10 && deformed == 7,
          std::to_string(deformed) + " deformed types, max |J| " + fmt(worst)};
}

Outcome closed_form() {
  const OscParams params(1.0, 2.0);
  Sampler sampler(kDefaultSeed ^ 0x5151);
  const auto triples = random_triples(1, sampler);
  // 100 on-shell plus 100 off-shell states.
  std::vector<PhasePoint> points = on_shell_points(params, two_period_grid(params, 100));
  for (const PhasePoint& pt : off_shell_points(params, 100, sampler)) points.push_back(pt);
  double worst = 0.0, worst_j3 = 0.0;
  for (const BianchiType& type : {BianchiType::make(BianchiTag::VIa, 0.5),
                                  BianchiType::make(BianchiTag::VIIa, 0.5),
                                  BianchiType::make(BianchiTag::IIIa1)}) {
    for (const OffShellSample& s :
         point_jacobiators(type, params, points, triples, Execution::Parallel)) {
      worst = std::max(worst, s.closed_form_dev);
      worst_j3 = std::max(worst_j3, s.j3);
    }
  }
  return {worst < 1e-11 && worst_j3 < 1e-13 && points.size() == 200,
          std::to_string(points.size()) + " states, max dev " + fmt(worst) + ", max |J3| " +
              fmt(worst_j3)};
}

Outcome converse() {
  const OscParams params(1.0, 2.0);
  const auto on = on_shell_points(params, two_period_grid(params, 64));
  Sampler sampler(kDefaultSeed);
  const auto off = off_shell_points(params, 64, sampler);
  int certified = 0;
  double worst_energy = 0.0;
  for (const EnergyCertificate& c : energy_certificates(params, on, Execution::Parallel)) {
    if (!c.certified()) continue;
    const double dev = std::abs(*c.energy - params.energy());
    worst_energy = std::max(worst_energy, dev);
    if (dev < 1e-10) ++certified;
  }
  int rejected = 0;
  double min_residual = 1e300;
  for (const EnergyCertificate& c : energy_certificates(params, off, Execution::Parallel)) {
    min_residual = std::min(min_residual, c.system_residual);
    if (!c.certified() && c.system_residual > 1e-3) ++rejected;
  }
  return {certified == 64 && rejected == 64,
          std::to_string(certified) + "/64 on-shell certified, " + std::to_string(rejected) +
              "/64 off-shell rejected (min residual " + fmt(min_residual) + ")"};
}

Outcome gerstenhaber() {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<std::size_t> arity(1, 3), dim(1, 3);
  double anti = 0.0, jac = 0.0, cross = 0.0;
  for (int n = 0; n < 120; ++n) {
    const std::size_t d = dim(rng);
    const MultiOp f = oracle::random_op(rng, d, arity(rng));
    const MultiOp g = oracle::random_op(rng, d, arity(rng));
    const MultiOp h = oracle::random_op(rng, d, arity(rng));
    const int a = f.degree(), b = g.degree(), c = h.degree();
    MultiOp s = gerstenhaber_bracket(f, g);
    s += parity_sign(a, b) * gerstenhaber_bracket(g, f);
    anti = std::max(anti, s.max_abs());
    MultiOp j = parity_sign(a, c) * gerstenhaber_bracket(f, gerstenhaber_bracket(g, h));
    j += parity_sign(b, a) * gerstenhaber_bracket(g, gerstenhaber_bracket(h, f));
    j += parity_sign(c, b) * gerstenhaber_bracket(h, gerstenhaber_bracket(f, g));
    jac = std::max(jac, j.max_abs());
  }
  for (int n = 0; n < 100; ++n) {
    const MultiOp mu = oracle::random_op(rng, 3, 2);
    const MultiOp M = oracle::random_op(rng, 3, 1);
    cross = std::max(cross, max_abs_diff(evolution_rhs(mu, M), gerstenhaber_bracket(M, mu)));
  }
  return {anti < 1e-10 && jac < 1e-10 && cross < 1e-13,
          "120 triples: antisym " + fmt(anti) + ", Jacobi " + fmt(jac) + "; cross-derivation " +
              fmt(cross)};
}

Outcome round_trip() {
  double worst = 0.0;
  int cases = 0;
  for (double p0 : {0.5, 1.0, 2.0, 10.0}) {
    const OscParams params(1.0, p0);
    for (double a : {0.5, 2.0}) {
      for (const BianchiType& type : all_types(a)) {
        const LieConstants lie = catalog(type);
        const MultiOp back =
            build_mu(solve_coefficients(lie, p0), {0.0, p0}, 1.0, aux_smooth(params, 0.0));
        worst = std::max(worst, max_abs_diff(back, lie.mu0));
        ++cases;
      }
    }
  }
  return {worst < 1e-13, std::to_string(cases) + " cases, max dev " + fmt(worst)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "Bianchi table reproduction", 1.0, table1_reproduction},
      {"AC2", "deformation table reproduction", 5.0, table2_reproduction},
      {"AC3", "ordinary Lax equation", 1.0, ordinary_lax},
      {"AC4", "operadic Lax equation", 10.0, operadic_lax},
      {"AC5", "dynamical rigidity", 1.0, rigidity},
      {"AC6", "deformed algebras are Lie on-shell", 5.0, dynamical_lie},
      {"AC7", "closed-form Jacobiator", 5.0, closed_form},
      {"AC8", "energy recovered from the Jacobi identity", 2.0, converse},
      {"AC9", "Gerstenhaber algebra properties", 5.0, gerstenhaber},
      {"AC10", "coefficient round trip", 1.0, round_trip},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("[%s] %s %s: %s (%.3f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL",
                c.id.c_str(), c.title.c_str(), o.detail.c_str(), secs, c.budget_s,
                in_time ? "" : ", over budget");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
