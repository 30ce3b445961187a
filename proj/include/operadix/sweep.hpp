#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <vector>

#include "operadix/bianchi.hpp"
#include "operadix/jacobi.hpp"
#include "operadix/lax.hpp"
#include "operadix/oscillator.hpp"

namespace operadix {

/// Sweeps over independent samples. `Parallel` distributes samples with
/// OpenMP; `Serial` is the reference loop. Every sample writes only its own
/// slot, so both produce bit-identical results.
enum class Execution { Serial, Parallel };

template <class Result, class Kernel>
std::vector<Result> map_samples(std::size_t count, Kernel&& kernel, Execution exec) {
  std::vector<Result> out(count);
  if (exec == Execution::Parallel) {
    const auto n = static_cast<std::ptrdiff_t>(count);
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = kernel(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(operadix_map_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t i = 0; i < count; ++i) out[i] = kernel(i);
  }
  return out;
}

/// `samples` evenly spaced times in [t_start, t_end) when `open_end`, else
/// in [t_start, t_end].
std::vector<double> time_grid(double t_start, double t_end, std::size_t samples,
                              bool open_end = true);

/// Two oscillator periods starting at 0, half-open.
std::vector<double> two_period_grid(const OscParams& params, std::size_t samples);

struct LaxSample {
  double t = 0.0;
  double ordinary = 0.0;
  double operadic = 0.0;
};

std::vector<LaxSample> lax_residuals(const LaxCoefficients& C, const OscParams& params,
                                     std::span<const double> times, double h, Execution exec);

struct TrajectorySample {
  double t = 0.0;
  OscState state;
  double energy = 0.0;
  AuxPair aux;
  std::array<double, 9> mu{};  // independent components, Table1Row::mu order
};

std::vector<TrajectorySample> deform_trajectory(const BianchiType& type, const OscParams& params,
                                                std::span<const double> times, Execution exec);

/// Max |J| over the basis triple and the supplied extra triples, per time, on
/// the trajectory.
std::vector<double> on_shell_jacobiators(const BianchiType& type, const OscParams& params,
                                         std::span<const double> times,
                                         std::span<const std::array<Vec3, 3>> triples,
                                         Execution exec);

/// A phase-space point with its auxiliary pair.
struct PhasePoint {
  OscState state;
  AuxPair aux;
};

struct OffShellSample {
  double max_j = 0.0;               // brute-force Jacobiator, basis and extra triples
  double closed_form_dev = 0.0;     // |brute force - closed form|, 0 if no closed form
  double j3 = 0.0;                  // max |J^3|
};

std::vector<OffShellSample> point_jacobiators(const BianchiType& type, const OscParams& params,
                                              std::span<const PhasePoint> points,
                                              std::span<const std::array<Vec3, 3>> triples,
                                              Execution exec);

std::vector<EnergyCertificate> energy_certificates(const OscParams& params,
                                                   std::span<const PhasePoint> points,
                                                   Execution exec);

/// Deterministic uniform sampler on [lo, hi) from a 64-bit seed. The mapping
/// from seed to values is fixed (splitmix64), independent of the standard
/// library's distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept;
  double uniform(double lo, double hi) noexcept;
  Vec3 vec3(double lo, double hi) noexcept;

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 20090311;

/// Random points with q, p in [-3, 3], skipping points whose energy lies
/// within `band` (relative) of p0^2 / 2 or below 1e-6. Pointwise auxiliary
/// pairs with sign hint +1.
std::vector<PhasePoint> off_shell_points(const OscParams& params, std::size_t count,
                                         Sampler& sampler, double band = 0.05);

/// Trajectory points with the smooth auxiliary branch.
std::vector<PhasePoint> on_shell_points(const OscParams& params, std::span<const double> times);

std::vector<std::array<Vec3, 3>> random_triples(std::size_t count, Sampler& sampler);

struct ConvergenceMeasure {
  double coarse = 0.0;  // max operadic residual at step h
  double fine = 0.0;    // max operadic residual at step h / 2
  /// coarse / fine; empty when the coarse residual is below `floor`, i.e. the
  /// deformation is constant and there is no truncation error to measure.
  std::optional<double> ratio;
};

ConvergenceMeasure operadic_convergence(const LaxCoefficients& C, const OscParams& params,
                                        std::span<const double> times, double h, Execution exec,
                                        double floor = 1e-12);

}  // namespace operadix
