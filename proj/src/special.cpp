#include "diracosc/special.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diracosc/kernels.hpp"

namespace diracosc {

double hermite(int n, double y) {
  if (n < 0) throw std::domain_error("hermite: n must be >= 0");
  double out;
  kernels::scalar::hermite_grid(n, std::span<const double>(&y, 1),
                                std::span<double>(&out, 1));
  return out;
}

double laguerre_assoc(int k, int alpha, double x) {
  if (k < 0) throw std::domain_error("laguerre_assoc: k must be >= 0");
  if (alpha < 0) throw std::domain_error("laguerre_assoc: alpha must be >= 0");
  double out;
  kernels::scalar::laguerre_grid(k, alpha, std::span<const double>(&x, 1),
                                 std::span<double>(&out, 1));
  return out;
}

double integrate(std::span<const double> values,
                 std::span<const double> grid) {
  const std::size_t m = grid.size();
  if (m < 3) throw std::domain_error("integrate: need at least 3 nodes");
  if (values.size() != m)
    throw std::domain_error("integrate: values/grid size mismatch");
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (!(grid[i] < grid[i + 1]))
      throw std::domain_error("integrate: grid must be strictly increasing");

  const double h = (grid[m - 1] - grid[0]) / static_cast<double>(m - 1);
  bool uniform = true;
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (std::fabs(grid[i + 1] - grid[i] - h) > 1e-9 * h) {
      uniform = false;
      break;
    }

  std::vector<double> w(m, 0.0);
  if (uniform) {
    // Composite Simpson over an odd node count; if the count is even, do
    // Simpson over the first m-1 nodes and close the last panel by trapezoid.
    const std::size_t simpson_end = (m % 2 == 1) ? m : m - 1;
    w[0] = h / 3.0;
    w[simpson_end - 1] += h / 3.0;
    for (std::size_t i = 1; i + 1 < simpson_end; ++i)
      w[i] = (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
    if (m % 2 == 0) {
      w[m - 2] += 0.5 * (grid[m - 1] - grid[m - 2]);
      w[m - 1] += 0.5 * (grid[m - 1] - grid[m - 2]);
    }
  } else {
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const double half = 0.5 * (grid[i + 1] - grid[i]);
      w[i] += half;
      w[i + 1] += half;
    }
  }
  return kernels::weighted_dot(w, values);
}

}  // namespace diracosc
