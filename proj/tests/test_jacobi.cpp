#include <doctest.h>

#include <cmath>
#include <random>

#include "operadix/bianchi.hpp"
#include "operadix/jacobi.hpp"
#include "operadix/lax.hpp"
#include "operadix/sweep.hpp"
#include "support/oracles.hpp"

using namespace operadix;

namespace {

double max_abs(const Vec3& v) { return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])}); }

Vec3 random_vec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng)};
}

BianchiType make(BianchiTag tag, double a = 0.5) {
  return BianchiType::make(tag, takes_parameter(tag) ? std::optional(a) : std::nullopt);
}

}  // namespace

TEST_SUITE("jacobi") {
  TEST_CASE("jacobiator examples and shape errors") {
    CHECK(max_abs(jacobiator(MultiOp(3, 2), kE1, kE2, kE3)) == 0.0);
    const MultiOp ix = catalog(make(BianchiTag::IX)).mu0;
    CHECK(max_abs(jacobiator(ix, kE1, kE2, kE3)) == 0.0);
    CHECK_THROWS_AS(jacobiator(MultiOp(2, 2), kE1, kE2, kE3), ShapeError);
    CHECK_THROWS_AS(jacobiator(MultiOp(3, 1), kE1, kE2, kE3), ShapeError);
  }

  TEST_CASE("jacobiator matches explicit index sums on random operations") {
    std::mt19937_64 rng(31);
    for (int n = 0; n < 50; ++n) {
      const MultiOp mu = oracle::random_op(rng, 3, 2);
      const Vec3 x = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
      const Vec3 a = jacobiator(mu, x, y, z);
      const auto b = oracle::index_jacobiator(mu, x, y, z);
      for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-14);
    }
  }

  TEST_CASE("triple product") {
    CHECK(triple_product({1, 2, 3}, {4, 5, 6}, {7, 8, 10}) == -3.0);
    CHECK(triple_product(kE1, kE2, kE3) == 1.0);
    CHECK(triple_product(kE2, kE1, kE3) == -1.0);
  }

  TEST_CASE("closed form off-shell example") {
    // omega = 1, p0 = 2 at (q, p) = (0, 3): A+ = sqrt(6), A- = 0, so
    // J^1 = -a T / 4 * sqrt(6) * (3 - 2) and J^2 = 0.
    const AuxPair aux = aux_pointwise({0.0, 3.0}, 1.0, 1);
    for (double a : {0.5, 1.0, 2.0}) {
      const Vec3 j = jacobiator_closed_form(a, {0.0, 3.0}, 1.0, aux, 2.0, 1.0);
      CHECK(j[0] == doctest::Approx(-a * std::sqrt(6.0) / 4.0).epsilon(1e-15));
      CHECK(j[1] == 0.0);
      CHECK(j[2] == 0.0);
    }
  }

  TEST_CASE("closed form agrees with brute force at random states") {
    const OscParams params(1.0, 2.0);
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const std::array<BianchiType, 5> types{
        make(BianchiTag::VIIa, 0.3), make(BianchiTag::VIIa, 2.5), make(BianchiTag::VIa, 0.3),
        make(BianchiTag::VIa, 2.5), make(BianchiTag::IIIa1)};
    for (const BianchiType& type : types) {
      double worst = 0.0, worst_j3 = 0.0;
      for (int n = 0; n < 200; ++n) {
        const OscState s{u(rng), u(rng)};
        const AuxPair aux = aux_pointwise(s, params.omega, n % 2 == 0 ? 1 : -1);
        const Vec3 x = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
        const JacobiReport r = jacobi_report(type, params, s, aux, x, y, z);
        REQUIRE(r.closed_form.has_value());
        for (std::size_t i = 0; i < 3; ++i) {
          worst = std::max(worst, std::abs(r.j_coeffs[i] - (*r.closed_form)[i]));
        }
        worst_j3 = std::max(worst_j3, std::abs(r.j_coeffs[2]));
      }
      INFO(type.label());
      CHECK(worst < 1e-11);
      CHECK(worst_j3 < 1e-13);
    }
  }

  TEST_CASE("the Jacobiator is alternating and scales with the triple product") {
    const OscParams params(1.0, 2.0);
    const OscState s{0.8, 2.4};
    const AuxPair aux = aux_pointwise(s, 1.0, 1);
    const MultiOp mu = deformed_product_at(make(BianchiTag::VIIa), params, s, aux);
    std::mt19937_64 rng(33);
    const Vec3 x = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
    const Vec3 j = jacobiator(mu, x, y, z);
    const Vec3 swapped = jacobiator(mu, y, x, z);
    const Vec3 basis = jacobiator(mu, kE1, kE2, kE3);
    const double t = triple_product(x, y, z);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(std::abs(j[i] + swapped[i]) < 1e-14);
      CHECK(std::abs(j[i] - t * basis[i]) < 1e-13);
    }
    CHECK(max_abs(jacobiator(mu, x, x, z)) < 1e-14);
  }

  TEST_CASE("forward theorem: deformed types are Lie along the trajectory") {
    const OscParams params(1.0, 2.0);
    for (BianchiTag tag : kAllTags) {
      const auto type = make(tag);
      double worst = 0.0;
      for (double t : two_period_grid(params, 64)) {
        const MultiOp mu = deform(type, params, t);
        worst = std::max(worst, basis_jacobiator_norm(mu));
      }
      INFO(type.label());
      CHECK(worst < 1e-10);
    }
  }

  TEST_CASE("II, IV, V and VI stay Lie off the energy level") {
    const OscParams params(1.0, 2.0);
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (BianchiTag tag : {BianchiTag::II, BianchiTag::IV, BianchiTag::V, BianchiTag::VI0}) {
      double worst = 0.0;
      for (int n = 0; n < 200; ++n) {
        const OscState s{u(rng), u(rng)};
        const AuxPair aux = aux_pointwise(s, 1.0, 1);
        worst = std::max(worst, basis_jacobiator_norm(
                                    deformed_product_at(make(tag), params, s, aux)));
      }
      CHECK(worst < 1e-10);
    }
    CHECK_FALSE(has_energy_dependent_jacobiator(BianchiTag::II));
    CHECK(has_energy_dependent_jacobiator(BianchiTag::IIIa1));
  }

  TEST_CASE("off-shell VIIa is not Lie") {
    const OscParams params(1.0, 2.0);
    const OscState s{0.0, 3.0};
    const AuxPair aux = aux_pointwise(s, 1.0, 1);
    const MultiOp mu = deformed_product_at(make(BianchiTag::VIIa), params, s, aux);
    CHECK(basis_jacobiator_norm(mu) > 0.1);
  }

  TEST_CASE("the Jacobi system reduces to A+(sqrt(2H) - p0)") {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int n = 0; n < 200; ++n) {
      const double omega = 0.5 + std::abs(u(rng));
      const OscState s{u(rng), u(rng)};
      const double p0 = 0.1 + std::abs(u(rng));
      const AuxPair aux = aux_pointwise(s, omega, 1);
      const double root = std::sqrt(2.0 * hamiltonian(s, omega));
      const double lhs = aux.a_minus * omega * s.q + aux.a_plus * (s.p - p0);
      CHECK(std::abs(lhs - aux.a_plus * (root - p0)) < 1e-12 * (1 + root + p0) * 3);
      const double lhs2 = aux.a_plus * omega * s.q - aux.a_minus * (s.p + p0);
      CHECK(std::abs(lhs2 - aux.a_minus * (root - p0)) < 1e-12 * (1 + root + p0) * 3);
    }
  }

  TEST_CASE("energy_from_jacobi certifies on-shell points") {
    for (double omega : {0.5, 1.0, 3.0}) {
      const OscParams params(omega, 2.0);
      for (const PhasePoint& pt : on_shell_points(params, two_period_grid(params, 64))) {
        const EnergyCertificate c = energy_from_jacobi(pt.aux, pt.state, omega, params.p0);
        REQUIRE(c.certified());
        CHECK(std::abs(*c.energy - params.energy()) < 1e-10);
        CHECK(std::abs(*c.ratio - 1.0) < 1e-10);
        CHECK(c.delta == doctest::Approx(-2.0 * std::sqrt(2.0 * c.state_energy)));
      }
    }
  }

  TEST_CASE("energy_from_jacobi examples") {
    // On the level at (0, p0).
    const AuxPair top = aux_pointwise({0.0, 2.0}, 1.0, 1);
    const EnergyCertificate on = energy_from_jacobi(top, {0.0, 2.0}, 1.0, 2.0);
    CHECK(on.certified());
    CHECK(*on.energy == 2.0);

    // Off the level: the system has no solution and nothing is certified.
    const AuxPair off_aux = aux_pointwise({0.0, 3.0}, 1.0, 1);
    const EnergyCertificate off = energy_from_jacobi(off_aux, {0.0, 3.0}, 1.0, 2.0);
    CHECK_FALSE(off.certified());
    CHECK(off.system_residual > 1e-3);
    CHECK(*off.ratio == doctest::Approx(2.0 / 3.0));

    // q != 0, p = 0 uses the w q line.
    const AuxPair side_aux = aux_pointwise({2.0, 0.0}, 1.0, 1);
    const EnergyCertificate side = energy_from_jacobi(side_aux, {2.0, 0.0}, 1.0, 2.0);
    CHECK(side.certified());

    CHECK_THROWS_AS(energy_from_jacobi(AuxPair{}, {0.0, 0.0}, 1.0, 2.0), DomainError);
  }

  TEST_CASE("energy_from_jacobi rejects random off-shell points") {
    const OscParams params(1.0, 2.0);
    Sampler sampler(kDefaultSeed);
    for (const PhasePoint& pt : off_shell_points(params, 64, sampler)) {
      const EnergyCertificate c = energy_from_jacobi(pt.aux, pt.state, 1.0, params.p0);
      CHECK_FALSE(c.certified());
      CHECK(c.system_residual > 1e-3);
    }
  }
}
