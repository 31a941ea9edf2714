#include "diracosc/special.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace diracosc;

namespace {

std::vector<double> uniform_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  const double h = (hi - lo) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) g[i] = lo + h * static_cast<double>(i);
  g.back() = hi;
  return g;
}

std::vector<double> sample(const std::vector<double>& grid,
                           const std::function<double(double)>& f) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = f(grid[i]);
  return v;
}

}  // namespace

TEST_CASE("hermite: fixed values and domain errors") {
  CHECK(hermite(0, -3.7) == 1.0);
  CHECK(hermite(0, 0.0) == 1.0);
  CHECK(hermite(1, 0.5) == 1.0);         // H_1(y) = 2y
  CHECK(hermite(3, 1.0) == -4.0);        // 8y^3 - 12y at y = 1
  CHECK_THROWS_AS(hermite(-1, 0.0), std::domain_error);
}

TEST_CASE("hermite parity: H_n(-y) = (-1)^n H_n(y)") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  for (int n = 0; n <= 12; ++n) {
    for (int t = 0; t < 20; ++t) {
      const double y = dist(rng);
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      CHECK(hermite(n, -y) == sign * hermite(n, y));
    }
  }
}

TEST_CASE("laguerre_assoc: fixed values and domain errors") {
  CHECK(laguerre_assoc(0, 0, 1.3) == 1.0);
  CHECK(laguerre_assoc(0, 4, -2.0) == 1.0);
  CHECK(laguerre_assoc(1, 2, 0.5) == 2.5);  // 1 + alpha - x
  CHECK(laguerre_assoc(2, 1, 2.0) == -1.0); // 3 - 3x + x^2/2 at x = 2
  CHECK_THROWS_AS(laguerre_assoc(-1, 0, 1.0), std::domain_error);
  CHECK_THROWS_AS(laguerre_assoc(2, -1, 1.0), std::domain_error);
}

TEST_CASE("laguerre_assoc satisfies x f'' + (alpha+1-x) f' + k f = 0") {
  // Fourth-order central differences at random interior points; residual
  // relative to the largest term.
  std::mt19937_64 rng(417);
  std::uniform_real_distribution<double> xs(0.5, 10.0);
  std::uniform_int_distribution<int> ks(0, 8), as(0, 4);
  const double h = 0.02;
  for (int t = 0; t < 50; ++t) {
    const int k = ks(rng);
    const int alpha = as(rng);
    const double x = xs(rng);
    const auto f = [&](double xx) { return laguerre_assoc(k, alpha, xx); };
    const double fpp = (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) +
                        16 * f(x + h) - f(x + 2 * h)) /
                       (12 * h * h);
    const double fp =
        (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
    const double t1 = x * fpp;
    const double t2 = (alpha + 1 - x) * fp;
    const double t3 = static_cast<double>(k) * f(x);
    const double biggest =
        std::max({std::fabs(t1), std::fabs(t2), std::fabs(t3), 1e-30});
    CHECK(std::fabs(t1 + t2 + t3) / biggest <= 1e-6);
  }
}

TEST_CASE("integrate: Simpson reference values") {
  // int_0^1 x^2 dx = 1/3
  auto g = uniform_grid(0.0, 1.0, 1001);
  auto v = sample(g, [](double x) { return x * x; });
  CHECK(integrate(v, g) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

  // int_0^15 exp(-x^2) x dx = (1 - e^-225)/2 = 0.5 to double precision
  g = uniform_grid(0.0, 15.0, 20001);
  v = sample(g, [](double x) { return std::exp(-x * x) * x; });
  CHECK(integrate(v, g) == doctest::Approx(0.5).epsilon(1e-10));

  // int_-10^10 H_1(y)^2 e^{-y^2} dy = 2 sqrt(pi)
  g = uniform_grid(-10.0, 10.0, 8001);
  v = sample(g, [](double y) { return 4.0 * y * y * std::exp(-y * y); });
  CHECK(integrate(v, g) ==
        doctest::Approx(2.0 * std::sqrt(M_PI)).epsilon(1e-8));
}

TEST_CASE("integrate is exact for cubics on uniform odd-count grids") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int t = 0; t < 10; ++t) {
    const double c0 = dist(rng), c1 = dist(rng), c2 = dist(rng),
                 c3 = dist(rng);
    const double lo = dist(rng), hi = lo + 1.0 + std::fabs(dist(rng));
    const auto g = uniform_grid(lo, hi, 101);
    const auto v = sample(g, [&](double x) {
      return c0 + x * (c1 + x * (c2 + x * c3));
    });
    const auto anti = [&](double x) {
      return c0 * x + c1 * x * x / 2 + c2 * x * x * x / 3 +
             c3 * x * x * x * x / 4;
    };
    CHECK(integrate(v, g) ==
          doctest::Approx(anti(hi) - anti(lo)).epsilon(1e-12));
  }
}

TEST_CASE("integrate: even node counts close the last panel by trapezoid") {
  // Exact for linear functions regardless of node parity.
  const auto g = uniform_grid(0.0, 2.0, 100);
  const auto v = sample(g, [](double x) { return 3.0 * x - 1.0; });
  CHECK(integrate(v, g) == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("integrate: non-uniform grids fall back to trapezoid") {
  std::vector<double> g{0.0, 0.1, 0.35, 0.7, 1.0};
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = 2.0 * g[i];
  CHECK(integrate(v, g) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("integrate: domain errors") {
  std::vector<double> two{0.0, 1.0};
  CHECK_THROWS_AS(integrate(two, two), std::domain_error);

  std::vector<double> bad_grid{0.0, 0.5, 0.5};
  std::vector<double> v{1.0, 1.0, 1.0};
  CHECK_THROWS_AS(integrate(v, bad_grid), std::domain_error);

  std::vector<double> g{0.0, 0.5, 1.0};
  std::vector<double> mismatched{1.0, 1.0};
  CHECK_THROWS_AS(integrate(mismatched, g), std::domain_error);
}
