#include "diracosc/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "diracosc/kernels.hpp"
#include "diracosc/special.hpp"

namespace diracosc {

double xi_scale(const PhysicalParams& params, Configuration config) {
  const double planar = config == Configuration::I ? params.a + params.b
                                                   : params.a - params.b;
  if (!(planar > 0.0))
    throw NoRealBoundState(
        "xi_scale: planar quantum a - b <= 0, radial confinement lost",
        planar);
  return std::sqrt(planar);
}

namespace {

double int_pow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// Quadrature of integrand samples on the profile grid closed at the origin
// (the radial integrand F^2 xi vanishes there), keeping the grid uniform so
// Simpson applies.
double radial_quadrature(std::span<const double> xi,
                         std::span<const double> integrand) {
  std::vector<double> nodes(xi.size() + 1);
  std::vector<double> vals(xi.size() + 1);
  nodes[0] = 0.0;
  vals[0] = 0.0;
  std::copy(xi.begin(), xi.end(), nodes.begin() + 1);
  std::copy(integrand.begin(), integrand.end(), vals.begin() + 1);
  return integrate(vals, nodes);
}

void check_uniform(std::span<const double> grid, double& h) {
  h = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (std::fabs(grid[i + 1] - grid[i] - h) > 1e-9 * h)
      throw std::domain_error("ode residual: grid must be uniform");
}

}  // namespace

RadialProfile radial_profile(int N, int ml, const RadialGrid& grid) {
  if (N < 0 || std::abs(ml) > N || (N - std::abs(ml)) % 2 != 0)
    throw std::domain_error(
        "radial_profile: requires N >= 0, |ml| <= N and N - |ml| even");
  if (grid.points < 3)
    throw std::domain_error("radial_profile: need at least 3 grid points");
  if (!(grid.xi_max >= 10.0))
    throw std::domain_error("radial_profile: xi_max must be >= 10");

  const int mabs = std::abs(ml);
  const int k = (N - mabs) / 2;
  const int m = grid.points;
  const double h = grid.xi_max / static_cast<double>(m);

  RadialProfile profile;
  profile.N = N;
  profile.ml = ml;
  profile.xi.resize(m);
  profile.F.resize(m);
  for (int i = 0; i < m; ++i) profile.xi[i] = static_cast<double>(i + 1) * h;

  std::vector<double> x2(m);
  for (int i = 0; i < m; ++i) x2[i] = profile.xi[i] * profile.xi[i];
  std::vector<double> lag(m);
  kernels::laguerre_grid(k, mabs, x2, lag);
  for (int i = 0; i < m; ++i)
    profile.F[i] = int_pow(profile.xi[i], mabs) * std::exp(-0.5 * x2[i]) * lag[i];

  std::vector<double> integrand(m);
  for (int i = 0; i < m; ++i)
    integrand[i] = profile.F[i] * profile.F[i] * profile.xi[i];
  const double norm2 = radial_quadrature(profile.xi, integrand);
  profile.A = 1.0 / std::sqrt(norm2);
  for (double& f : profile.F) f *= profile.A;
  return profile;
}

AxialProfile axial_profile(int n, const AxialGrid& grid) {
  if (n < 0) throw std::domain_error("axial_profile: n must be >= 0");
  if (grid.points < 3)
    throw std::domain_error("axial_profile: need at least 3 grid points");
  if (!(grid.y_max > 0.0))
    throw std::domain_error("axial_profile: y_max must be > 0");

  const int m = grid.points;
  const double h = 2.0 * grid.y_max / static_cast<double>(m - 1);
  AxialProfile profile;
  profile.n = n;
  profile.y.resize(m);
  profile.G.resize(m);
  // Symmetric construction: y_i = (i - c) h with c the (half-)integer center,
  // so y_i = -y_{m-1-i} holds bit-exactly.
  const double c = 0.5 * static_cast<double>(m - 1);
  for (int i = 0; i < m; ++i) profile.y[i] = (static_cast<double>(i) - c) * h;

  kernels::hermite_grid(n, profile.y, profile.G);
  for (int i = 0; i < m; ++i)
    profile.G[i] *= std::exp(-0.5 * profile.y[i] * profile.y[i]);

  std::vector<double> sq(m);
  for (int i = 0; i < m; ++i) sq[i] = profile.G[i] * profile.G[i];
  const double norm2 = integrate(sq, profile.y);
  const double a = 1.0 / std::sqrt(norm2);
  for (double& g : profile.G) g *= a;
  return profile;
}

namespace {

// Max relative ODE residual over interior nodes with 4th-order central
// stencils.  term_f fills the non-derivative terms for node i given (value,
// first derivative, second derivative); returns |sum| / max |term|.
template <typename Terms>
double residual_scan(std::span<const double> grid, std::span<const double> f,
                     double skip_below, Terms&& terms) {
  if (grid.size() < 200)
    throw std::domain_error("ode residual: grid too coarse (< 200 points)");
  double h;
  check_uniform(grid, h);

  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < grid.size(); ++i) {
    if (grid[i] < skip_below) continue;
    // Stencil pairs grouped by symmetry so that parity-exact samples cancel
    // exactly (an odd profile's center node would otherwise leave a one-ulp
    // residue amplified by 1/h^2).
    const double fpp = (16.0 * (f[i - 1] + f[i + 1]) -
                        (f[i - 2] + f[i + 2]) - 30.0 * f[i]) /
                       (12.0 * h * h);
    const double fp =
        (8.0 * (f[i + 1] - f[i - 1]) - (f[i + 2] - f[i - 2])) / (12.0 * h);
    double sum = 0.0, biggest = 0.0;
    terms(i, f[i], fp, fpp, [&](double term) {
      sum += term;
      biggest = std::max(biggest, std::fabs(term));
    });
    if (biggest == 0.0) continue;
    worst = std::max(worst, std::fabs(sum) / biggest);
  }
  return worst;
}

}  // namespace

double radial_ode_residual(const RadialProfile& profile, double d_offset) {
  const double D = static_cast<double>(2 * (profile.N + 1)) + d_offset;
  const double ml2 = static_cast<double>(profile.ml) * profile.ml;
  return residual_scan(
      profile.xi, profile.F, 0.2,
      [&](std::size_t i, double fv, double fp, double fpp, auto&& add) {
        const double xi = profile.xi[i];
        add(fpp);
        add(fp / xi);
        add(-ml2 * fv / (xi * xi));
        add(-xi * xi * fv);
        add(D * fv);
      });
}

double axial_ode_residual(const AxialProfile& profile,
                          double eigenvalue_offset) {
  const double lam =
      static_cast<double>(2 * profile.n + 1) + eigenvalue_offset;
  return residual_scan(
      profile.y, profile.G, -1e300,
      [&](std::size_t i, double gv, double /*gp*/, double gpp, auto&& add) {
        const double y = profile.y[i];
        add(gpp);
        add(-y * y * gv);
        add(lam * gv);
      });
}

int count_sign_changes(std::span<const double> samples) {
  int changes = 0;
  int prev = 0;
  for (double v : samples) {
    if (v == 0.0) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::complex<double> WaveComponent::amplitude(std::size_t radial_index,
                                              std::size_t axial_index,
                                              double phi) const {
  const double mag = radial.F[radial_index] * axial.G[axial_index];
  return mag * std::exp(std::complex<double>(
                   0.0, static_cast<double>(ml) * phi));
}

WaveComponent assemble_component(const QuantumNumbers& qn,
                                 const PhysicalParams& params,
                                 const Grids& grids) {
  validate(qn);
  WaveComponent component;
  component.qn = qn;
  component.xi_per_rho = xi_scale(params, qn.config);
  component.radial = radial_profile(qn.N, qn.ml, grids.radial);
  component.axial = axial_profile(qn.n, grids.axial);
  component.ml = qn.ml;
  component.ms = qn.ms();
  return component;
}

}  // namespace diracosc
