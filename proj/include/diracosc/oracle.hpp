#pragma once

// Independent numerical verification of the closed-form spectrum: the
// separated radial and axial ODEs are discretized as symmetric tridiagonal
// operators, their low eigenvalues are extracted with an in-house Sturm
// sequence bisection solver, and the results are compared against the
// closed-form quantization (D = 2(N+1), axial 2n+1) and the end-to-end E^2.
//
// Radial discretization: finite-volume (flux) form of the radial operator on
// a half-offset grid xi_i = (i - 1/2) h, symmetrized with the sqrt(xi) weight.
// This keeps the diagonal at 2/h^2 + xi^2 + ml^2/xi^2 and carries the
// cylindrical measure in the off-diagonals, -(1/h^2) * i / sqrt(i^2 - 1/4).
// The half-offset grid places the zero-flux face exactly at the singular
// origin, which restores clean second-order eigenvalue convergence for
// ml = 0 (the plain u = sqrt(xi) F substitution with a (ml^2-1/4)/xi^2
// potential does not converge there; see tests for the measured orders).
//
// Operators are immutable once built; bisection of disjoint eigenvalue
// brackets is independent, and the Sturm counts for distinct shifts are
// evaluated through the SIMD kernels (one shift per lane).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diracosc/core.hpp"

namespace diracosc {

struct TridiagonalOperator {
  std::vector<double> diag;
  std::vector<double> offdiag;  // size diag.size() - 1
  std::vector<double> grid;     // node coordinates
  double h = 0.0;

  std::size_t dim() const { return diag.size(); }
};

// Half-offset radial nodes xi_i = (i - 1/2) h, h = xi_max / points.
std::vector<double> radial_oracle_nodes(double xi_max, int points);

// Symmetric axial nodes on (-y_max, y_max), h = 2 y_max / (points + 1),
// Dirichlet walls at +-y_max.
std::vector<double> axial_oracle_nodes(double y_max, int points);

// Radial operator for given ml.  Requires >= 1000 uniform half-offset nodes,
// all > 0 (a grid touching xi = 0 hits the singular potential and is
// rejected).  Low eigenvalues approximate D = 2(N+1), N = 2k + |ml|.
TridiagonalOperator discretize_radial(int ml, std::span<const double> nodes);

// Axial oscillator operator; requires a uniform, symmetric grid.  Low
// eigenvalues approximate 2n + 1.
TridiagonalOperator discretize_axial(std::span<const double> nodes);

// Number of eigenvalues of T that are <= x (exact, by Sturm sign counting).
int sturm_count(const TridiagonalOperator& T, double x);

struct EigenResult {
  int index;              // 0-based, ascending
  double value;           // bracket midpoint
  double residual_bound;  // final bracket half-width, <= tol/2
  int iterations;
};

// The `count` smallest eigenvalues by Sturm counting plus bisection from
// Gershgorin bounds; each bracketed to width <= tol, none missed (counts
// carry multiplicity).  Deterministic.  Throws std::domain_error when count
// exceeds the dimension or tol <= 0.
std::vector<EigenResult> sturm_bisect(const TridiagonalOperator& T, int count,
                                      double tol);

struct VerificationItem {
  std::string name;
  double expected;
  double actual;
  double rel_error;
  bool pass;
};

struct VerificationReport {
  Configuration config;
  double a;
  double b;
  std::vector<VerificationItem> items;
  bool pass = true;
};

struct VerifyOptions {
  int max_N = 6;
  int max_n = 6;
  std::vector<int> ml_set = {0, 1, 2, 3};  // |ml| values to probe
  double xi_max = 15.0;
  int radial_points = 4000;
  double y_max = 8.0;
  int axial_points = 4001;
  double bisect_tol = 1e-9;
  double tol_eigen = 1e-5;  // radial/axial eigenvalue gate, relative
  double tol_e2e = 1e-4;    // end-to-end E^2 gate, relative
};

// Per-|ml| radial eigenvalues against {2(2k+|ml|+1)}, axial eigenvalues
// against {2n+1}, then E^2 reconstructed from the numerical (D, eps) chain
// against the closed form, for both spinor components.  ConfigII requires
// a > b (std::domain_error otherwise).
VerificationReport verify_against_closed_form(const PhysicalParams& params,
                                              Configuration config,
                                              const VerifyOptions& opts = {});

// Elementwise deviation of (sigma . v)^2 from |v|^2 I for one real 3-vector,
// built from the explicit Pauli matrices.
double pauli_square_deviation(double vx, double vy, double vz);

struct PauliCheck {
  int trials;
  double worst_deviation;
  bool pass;  // worst <= 1e-12
};

// Seeded random unit vectors; deterministic for a fixed seed.
PauliCheck pauli_identity_check(int trials, std::uint64_t seed);

}  // namespace diracosc
