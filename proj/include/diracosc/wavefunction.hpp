#pragma once

// Separated eigenfunctions of the Dirac oscillator in an axial field: the
// radial profile F(xi), the axial oscillator profile G(y), the angular phase
// e^{i ml phi} and the spinor label m_s.  Profiles are sampled on uniform
// grids, normalized by quadrature, and validated by direct substitution into
// their separated ODEs (ode residual checks).
//
// Radial ansatz: F(xi) = A xi^{|ml|} e^{-xi^2/2} L_k^{|ml|}(xi^2) with
// k = (N - |ml|)/2, which satisfies the radial equation
//   F'' + F'/xi - ml^2 F/xi^2 - xi^2 F + D F = 0,   D = 2(N+1);
// the residual check below is the arbiter for this form.
//
// Profiles are immutable once constructed; construction across quantum
// numbers may run in parallel.

#include <complex>
#include <span>
#include <vector>

#include "diracosc/core.hpp"

namespace diracosc {

struct RadialGrid {
  double xi_max = 15.0;  // >= 10
  int points = 4000;     // uniform nodes on (0, xi_max]
};

struct AxialGrid {
  double y_max = 8.0;
  int points = 4001;  // uniform nodes on [-y_max, y_max]
};

struct Grids {
  RadialGrid radial;
  AxialGrid axial;
};

struct RadialProfile {
  int N = 0;
  int ml = 0;
  std::vector<double> xi;  // nodes, (0, xi_max]
  std::vector<double> F;   // normalized amplitude: integral F^2 xi dxi = 1
  double A = 0.0;          // normalization constant actually applied
};

struct AxialProfile {
  int n = 0;
  std::vector<double> y;  // nodes, [-y_max, y_max]
  std::vector<double> G;  // normalized amplitude: integral G^2 dy = 1
};

// Scale factor from physical radius rho (in Compton lengths) to xi:
// sqrt(a + b) for ConfigI, sqrt(a - b) for ConfigII.  Throws NoRealBoundState
// when the planar quantum is <= 0 (radial confinement lost).
double xi_scale(const PhysicalParams& params, Configuration config);

// Normalized radial profile with k = (N - |ml|)/2 interior nodes.
// Throws std::domain_error on parity-invalid (N, ml) or a bad grid spec
// (xi_max < 10, points < 3).
RadialProfile radial_profile(int N, int ml, const RadialGrid& grid = {});

// Normalized axial oscillator eigenfunction ~ H_n(y) e^{-y^2/2}, with exactly
// n sign changes.  Throws std::domain_error on n < 0 or a bad grid spec.
AxialProfile axial_profile(int n, const AxialGrid& grid = {});

// Maximum over interior nodes (xi >= 0.2, away from the centrifugal
// singularity) of |radial ODE of F| divided by the largest term magnitude at
// that node, using D = 2(N+1) + d_offset.  Fourth-order central differences;
// requires a uniform grid of at least 200 points (std::domain_error).
double radial_ode_residual(const RadialProfile& profile, double d_offset = 0.0);

// Same residual measure for the axial equation G'' + (2n+1+offset - y^2)G = 0.
double axial_ode_residual(const AxialProfile& profile,
                          double eigenvalue_offset = 0.0);

// Sign changes of a sampled function, ignoring exact zeros; equals the
// interior node count for the profiles above.
int count_sign_changes(std::span<const double> samples);

struct WaveComponent {
  QuantumNumbers qn;
  RadialProfile radial;
  AxialProfile axial;
  int ml = 0;               // angular phase quantum: e^{i ml phi}
  double ms = -0.5;         // spinor label fixed by (config, component)
  double xi_per_rho = 1.0;  // xi = xi_per_rho * rho

  // psi at sample indices and azimuth phi; |psi| is phi-independent and the
  // probability density separates as F^2 G^2.
  std::complex<double> amplitude(std::size_t radial_index,
                                 std::size_t axial_index, double phi) const;
};

// Combined component with consistent labels; errors from xi_scale propagate.
WaveComponent assemble_component(const QuantumNumbers& qn,
                                 const PhysicalParams& params,
                                 const Grids& grids = {});

}  // namespace diracosc
