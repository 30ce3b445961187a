#include "operadix/sweep.hpp"

#include <algorithm>
#include <cmath>

namespace operadix {

std::vector<double> time_grid(double t_start, double t_end, std::size_t samples, bool open_end) {
  if (samples == 0) return {};
  if (samples == 1) return {t_start};
  const double divisor = open_end ? static_cast<double>(samples)
                                  : static_cast<double>(samples - 1);
  std::vector<double> out(samples);
  for (std::size_t n = 0; n < samples; ++n) {
    out[n] = t_start + (t_end - t_start) * static_cast<double>(n) / divisor;
  }
  return out;
}

std::vector<double> two_period_grid(const OscParams& params, std::size_t samples) {
  return time_grid(0.0, 2.0 * params.period(), samples, true);
}

std::vector<LaxSample> lax_residuals(const LaxCoefficients& C, const OscParams& params,
                                     std::span<const double> times, double h, Execution exec) {
  return map_samples<LaxSample>(
      times.size(),
      [&](std::size_t i) {
        const double t = times[i];
        return LaxSample{t, ordinary_lax_residual(params, t),
                         operadic_lax_residual(C, params, t, h)};
      },
      exec);
}

std::vector<TrajectorySample> deform_trajectory(const BianchiType& type, const OscParams& params,
                                                std::span<const double> times, Execution exec) {
  const LaxCoefficients C = solve_coefficients(catalog(type), params.p0);
  return map_samples<TrajectorySample>(
      times.size(),
      [&](std::size_t i) {
        TrajectorySample s;
        s.t = times[i];
        s.state = flow(params, s.t);
        s.energy = hamiltonian(s.state, params.omega);
        s.aux = aux_smooth(params, s.t);
        s.mu = independent_components(build_mu(C, s.state, params.omega, s.aux));
        return s;
      },
      exec);
}

namespace {

double max_abs3(const Vec3& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

}  // namespace

std::vector<double> on_shell_jacobiators(const BianchiType& type, const OscParams& params,
                                         std::span<const double> times,
                                         std::span<const std::array<Vec3, 3>> triples,
                                         Execution exec) {
  const LaxCoefficients C = solve_coefficients(catalog(type), params.p0);
  return map_samples<double>(
      times.size(),
      [&](std::size_t i) {
        const double t = times[i];
        const MultiOp mu =
            build_mu(C, flow(params, t), params.omega, aux_smooth(params, t));
        double worst = basis_jacobiator_norm(mu);
        for (const auto& [x, y, z] : triples) {
          worst = std::max(worst, max_abs3(jacobiator(mu, x, y, z)));
        }
        return worst;
      },
      exec);
}

std::vector<OffShellSample> point_jacobiators(const BianchiType& type, const OscParams& params,
                                              std::span<const PhasePoint> points,
                                              std::span<const std::array<Vec3, 3>> triples,
                                              Execution exec) {
  const LaxCoefficients C = solve_coefficients(catalog(type), params.p0);
  const bool closed = has_energy_dependent_jacobiator(type.tag());
  const double a = type.parameter();
  return map_samples<OffShellSample>(
      points.size(),
      [&](std::size_t i) {
        const PhasePoint& pt = points[i];
        const MultiOp mu = build_mu(C, pt.state, params.omega, pt.aux);
        OffShellSample out;
        auto visit = [&](const Vec3& x, const Vec3& y, const Vec3& z) {
          const Vec3 j = jacobiator(mu, x, y, z);
          out.max_j = std::max(out.max_j, max_abs3(j));
          out.j3 = std::max(out.j3, std::abs(j[2]));
          if (closed) {
            const Vec3 cf = jacobiator_closed_form(a, pt.state, params.omega, pt.aux, params.p0,
                                                   triple_product(x, y, z));
            const Vec3 diff{j[0] - cf[0], j[1] - cf[1], j[2] - cf[2]};
            out.closed_form_dev = std::max(out.closed_form_dev, max_abs3(diff));
          }
        };
        visit(kE1, kE2, kE3);
        for (const auto& [x, y, z] : triples) visit(x, y, z);
        return out;
      },
      exec);
}

std::vector<EnergyCertificate> energy_certificates(const OscParams& params,
                                                   std::span<const PhasePoint> points,
                                                   Execution exec) {
  return map_samples<EnergyCertificate>(
      points.size(),
      [&](std::size_t i) {
        return energy_from_jacobi(points[i].aux, points[i].state, params.omega, params.p0);
      },
      exec);
}

std::uint64_t Sampler::next() noexcept {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Sampler::uniform(double lo, double hi) noexcept {
  const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Vec3 Sampler::vec3(double lo, double hi) noexcept {
  const double x = uniform(lo, hi);
  const double y = uniform(lo, hi);
  const double z = uniform(lo, hi);
  return {x, y, z};
}

std::vector<PhasePoint> off_shell_points(const OscParams& params, std::size_t count,
                                         Sampler& sampler, double band) {
  std::vector<PhasePoint> out;
  out.reserve(count);
  const double e = params.energy();
  while (out.size() < count) {
    const double q = sampler.uniform(-3.0, 3.0);
    const double p = sampler.uniform(-3.0, 3.0);
    const OscState s{q, p};
    const double h = hamiltonian(s, params.omega);
    if (h < 1e-6 || std::abs(h - e) <= band * e) continue;
    out.push_back({s, aux_pointwise(s, params.omega, 1)});
  }
  return out;
}

std::vector<PhasePoint> on_shell_points(const OscParams& params, std::span<const double> times) {
  std::vector<PhasePoint> out;
  out.reserve(times.size());
  for (double t : times) out.push_back({flow(params, t), aux_smooth(params, t)});
  return out;
}

std::vector<std::array<Vec3, 3>> random_triples(std::size_t count, Sampler& sampler) {
  std::vector<std::array<Vec3, 3>> out(count);
  for (auto& tr : out) {
    tr[0] = sampler.vec3(-1.0, 1.0);
    tr[1] = sampler.vec3(-1.0, 1.0);
    tr[2] = sampler.vec3(-1.0, 1.0);
  }
  return out;
}

ConvergenceMeasure operadic_convergence(const LaxCoefficients& C, const OscParams& params,
                                        std::span<const double> times, double h, Execution exec,
                                        double floor) {
  auto worst = [&](double step) {
    const auto samples = map_samples<double>(
        times.size(), [&](std::size_t i) { return operadic_lax_residual(C, params, times[i], step); },
        exec);
    return samples.empty() ? 0.0 : *std::max_element(samples.begin(), samples.end());
  };
  ConvergenceMeasure m;
  m.coarse = worst(h);
  m.fine = worst(0.5 * h);
  if (m.coarse >= floor && m.fine > 0.0) m.ratio = m.coarse / m.fine;
  return m;
}

}  // namespace operadix
