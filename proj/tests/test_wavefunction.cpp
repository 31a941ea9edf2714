#include "diracosc/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "diracosc/special.hpp"
#include "doctest.h"

using namespace diracosc;

namespace {

// Quadrature of f(xi) * xi over a radial profile's grid, closed at the origin
// where the integrand vanishes.
double radial_inner(const RadialProfile& fa, const RadialProfile& fb) {
  std::vector<double> nodes(fa.xi.size() + 1);
  std::vector<double> vals(fa.xi.size() + 1);
  nodes[0] = 0.0;
  vals[0] = 0.0;
  for (std::size_t i = 0; i < fa.xi.size(); ++i) {
    nodes[i + 1] = fa.xi[i];
    vals[i + 1] = fa.F[i] * fb.F[i] * fa.xi[i];
  }
  return integrate(vals, nodes);
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("xi_scale: closed values, error regime and the quartic identity") {
  CHECK(xi_scale(PhysicalParams::make(1.0, 0.0), Configuration::I) == 1.0);
  CHECK(xi_scale(PhysicalParams::make(1.0, 0.5), Configuration::I) ==
        doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  CHECK_THROWS_AS(
      xi_scale(PhysicalParams::make(1.0, 1.5), Configuration::II),
      NoRealBoundState);
  CHECK_THROWS_AS(
      xi_scale(PhysicalParams::make(1.0, 1.0), Configuration::II),
      NoRealBoundState);

  // The quartic-root scale (B^2e^2/4c^2hbar^2 + m e omega B/hbar^2 c +
  // m^2 omega^2/hbar^2)^(1/4) written in natural units must match
  // sqrt(a +- b).
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(1e-3, 2.0);
  std::uniform_real_distribution<double> frac(0.0, 0.8);
  for (int t = 0; t < 100; ++t) {
    const double a = dist(rng);
    const double b = dist(rng);
    const PhysicalParams p = PhysicalParams::make(a, b);
    const double quartic_one =
        std::pow(b * b + 2.0 * a * b + a * a, 0.25);
    CHECK(std::fabs(quartic_one - xi_scale(p, Configuration::I)) <= 1e-14);

    // second configuration away from the confinement edge, where the
    // three-term sum does not cancel catastrophically
    const double b2 = frac(rng) * a;
    const PhysicalParams p2 = PhysicalParams::make(a, b2);
    const double quartic_two =
        std::pow(b2 * b2 - 2.0 * a * b2 + a * a, 0.25);
    CHECK(std::fabs(quartic_two - xi_scale(p2, Configuration::II)) <= 1e-14);
  }
}

TEST_CASE("radial_profile: ground profile is the normalized Gaussian") {
  const RadialProfile profile = radial_profile(0, 0);
  CHECK(profile.A == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
  for (std::size_t i = 0; i < profile.xi.size(); i += 509) {
    const double expected =
        std::sqrt(2.0) * std::exp(-0.5 * profile.xi[i] * profile.xi[i]);
    CHECK(profile.F[i] == doctest::Approx(expected).epsilon(1e-7));
  }
}

TEST_CASE("radial_profile: node structure") {
  // N=2, ml=0 has a single node at xi = 1 (the zero of 1 - xi^2)
  const RadialProfile two = radial_profile(2, 0);
  CHECK(count_sign_changes(two.F) == 1);
  for (std::size_t i = 0; i + 1 < two.xi.size(); ++i)
    if (two.F[i] > 0.0 && two.F[i + 1] < 0.0) {
      CHECK(two.xi[i] <= 1.0 + 1e-12);
      CHECK(two.xi[i + 1] >= 1.0 - 1e-12);
    }

  // N=1, ml=1 is nodeless with its maximum at xi = 1
  const RadialProfile one = radial_profile(1, 1);
  CHECK(count_sign_changes(one.F) == 0);
  const auto peak = std::max_element(one.F.begin(), one.F.end());
  const double xi_peak = one.xi[std::distance(one.F.begin(), peak)];
  CHECK(xi_peak == doctest::Approx(1.0).epsilon(1e-3));

  // node count equals k = (N - |ml|)/2 generally; tails decay to zero
  for (int N = 0; N <= 8; ++N)
    for (int ml = -N; ml <= N; ml += 2) {
      const RadialProfile profile = radial_profile(N, ml);
      CHECK(count_sign_changes(profile.F) == (N - std::abs(ml)) / 2);
      CHECK(std::fabs(profile.F.back()) < 1e-12);
    }
}

TEST_CASE("radial_profile: normalization against quadrature and closed form") {
  for (int N : {0, 1, 2, 4, 6}) {
    for (int ml = -N; ml <= N; ml += 2) {
      const RadialProfile profile = radial_profile(N, ml);
      CHECK(std::fabs(radial_inner(profile, profile) - 1.0) <= 1e-8);
      // A = sqrt(2 k! / (k + |ml|)!)
      const int k = (N - std::abs(ml)) / 2;
      const double exact =
          std::sqrt(2.0 * factorial(k) / factorial(k + std::abs(ml)));
      CHECK(profile.A == doctest::Approx(exact).epsilon(1e-7));
    }
  }
}

TEST_CASE("radial_profile: parity and grid validation") {
  CHECK_THROWS_AS(radial_profile(2, 1), std::domain_error);
  CHECK_THROWS_AS(radial_profile(1, 2), std::domain_error);
  CHECK_THROWS_AS(radial_profile(-1, 0), std::domain_error);
  CHECK_THROWS_AS(radial_profile(0, 0, RadialGrid{8.0, 4000}),
                  std::domain_error);
}

TEST_CASE("radial orthonormality at fixed |ml|") {
  for (int mabs : {0, 1, 2}) {
    std::vector<RadialProfile> profiles;
    for (int k = 0; k <= 4; ++k)
      profiles.push_back(radial_profile(2 * k + mabs, mabs));
    for (std::size_t i = 0; i < profiles.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        CHECK(std::fabs(radial_inner(profiles[i], profiles[j])) <= 1e-8);
  }
}

TEST_CASE("axial_profile: ground Gaussian, parity and node counts") {
  const AxialProfile ground = axial_profile(0);
  const double norm = std::pow(M_PI, -0.25);
  for (std::size_t i = 0; i < ground.y.size(); i += 487) {
    const double expected =
        norm * std::exp(-0.5 * ground.y[i] * ground.y[i]);
    CHECK(ground.G[i] == doctest::Approx(expected).epsilon(1e-7));
  }

  // odd n vanishes at the origin (grid midpoint)
  const AxialProfile one = axial_profile(1);
  CHECK(one.y[one.y.size() / 2] == 0.0);
  CHECK(one.G[one.G.size() / 2] == 0.0);

  CHECK(count_sign_changes(axial_profile(3).G) == 3);
  for (int n = 0; n <= 6; ++n)
    CHECK(count_sign_changes(axial_profile(n).G) == n);

  // normalization
  for (int n : {0, 2, 5}) {
    const AxialProfile profile = axial_profile(n);
    std::vector<double> sq(profile.G.size());
    for (std::size_t i = 0; i < sq.size(); ++i)
      sq[i] = profile.G[i] * profile.G[i];
    CHECK(std::fabs(integrate(sq, profile.y) - 1.0) <= 1e-8);
  }

  CHECK_THROWS_AS(axial_profile(-1), std::domain_error);
}

TEST_CASE("ode residuals: analytic profiles satisfy their equations") {
  CHECK(radial_ode_residual(radial_profile(0, 0)) <= 1e-6);
  CHECK(axial_ode_residual(axial_profile(0)) <= 1e-6);

  // sweep the quantum numbers in scope
  for (int N : {2, 5, 6}) {
    for (int ml = N % 2; ml <= N; ml += 2)
      CHECK(radial_ode_residual(radial_profile(N, ml)) <= 1e-6);
  }
  for (int n : {1, 3, 6}) CHECK(axial_ode_residual(axial_profile(n)) <= 1e-6);
}

TEST_CASE("ode residuals: off-eigenvalue perturbation is detected") {
  CHECK(radial_ode_residual(radial_profile(0, 0), 0.1) > 1e-3);
  CHECK(radial_ode_residual(radial_profile(6, 0), 0.1) > 1e-3);
  CHECK(axial_ode_residual(axial_profile(2), 0.1) > 1e-3);
}

TEST_CASE("ode residuals: coarse grids are rejected") {
  const RadialProfile coarse = radial_profile(0, 0, RadialGrid{15.0, 150});
  CHECK_THROWS_AS(radial_ode_residual(coarse), std::domain_error);
  const AxialProfile coarse_axial = axial_profile(0, AxialGrid{8.0, 151});
  CHECK_THROWS_AS(axial_ode_residual(coarse_axial), std::domain_error);
}

TEST_CASE("assemble_component: labels, phase independence and propagation") {
  const PhysicalParams p = PhysicalParams::make(1.0, 0.5);
  const QuantumNumbers up =
      QuantumNumbers::make(Configuration::I, Component::Upper, 2, 1, 2);
  const WaveComponent component = assemble_component(up, p);
  CHECK(component.ms == -0.5);
  CHECK(component.ml == 2);
  CHECK(component.xi_per_rho == doctest::Approx(std::sqrt(1.5)));

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> phis(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<std::size_t> ri(0, component.radial.F.size() - 1);
  std::uniform_int_distribution<std::size_t> ai(0, component.axial.G.size() - 1);
  for (int t = 0; t < 20; ++t) {
    const std::size_t i = ri(rng);
    const std::size_t j = ai(rng);
    const double mag =
        std::fabs(component.radial.F[i] * component.axial.G[j]);
    CHECK(std::abs(component.amplitude(i, j, phis(rng))) ==
          doctest::Approx(mag).epsilon(1e-14));
  }

  // the two components of one configuration share ml and flip m_s
  const QuantumNumbers lo =
      QuantumNumbers::make(Configuration::I, Component::Lower, 2, 1, 2);
  const WaveComponent lower = assemble_component(lo, p);
  CHECK(lower.ml == component.ml);
  CHECK(lower.ms == -component.ms);

  // xi_scale failure propagates for the second configuration in strong field
  const PhysicalParams strong = PhysicalParams::make(1.0, 1.5);
  const QuantumNumbers q2 =
      QuantumNumbers::make(Configuration::II, Component::Upper, 0, 0, 0);
  CHECK_THROWS_AS(assemble_component(q2, strong), NoRealBoundState);
}
