#pragma once

// Closed-form energy levels of the Dirac oscillator in an axial magnetic
// field: the four spectral branches, the separation-constant consistency
// chain, zero-field and non-relativistic reductions, degeneracy counting,
// field sweeps and the transition-line catalog.
//
// The bracket K (in units of mc^2) is the single source of truth; E^2 and the
// non-relativistic kinetic energy are derived views of it:
//   E^2/(mc^2)^2 = 1 + 2K.
//
// K is evaluated in grouped form, K = c_a * a + c_b * b with exact integer
// coefficients per branch, which keeps the b = 0 reduction bit-identical to
// the dedicated zero-field formula:
//   c_a = N + n + s*ml + 3*[lower],   c_b = s*(N + 2*[lower]) + ml,
// where s = +1 for ConfigI, -1 for ConfigII and [lower] = 1 for the lower
// spinor component.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "diracosc/core.hpp"

namespace diracosc {

struct EnergyLevel {
  QuantumNumbers qn;
  double K;   // bracket value in units of mc^2
  double E2;  // E^2 / (mc^2)^2 = 1 + 2K
  double E;   // E / mc^2, positive root
};

// Separation constants in units of (mc^2)^2: the axial constant eps, the
// radial coupling lambda and the dimensionless radial eigenvalue D = 2(N+1).
struct Intermediates {
  double eps;
  double lam;
  double D;
};

struct ChainCheck {
  Intermediates inter;
  double e2_reconstructed;  // E^2 rebuilt by inverting the separation chain
};

// Exact integer coefficients of K = ca * a + cb * b for one branch.
struct BracketCoeffs {
  int ca;
  int cb;
};
BracketCoeffs bracket_coeffs(const QuantumNumbers& qn);

double bracket_K(const PhysicalParams& params, const QuantumNumbers& qn);

// Full level; throws NoRealBoundState when E^2 < 0 (ConfigII strong-field
// regime), never returns NaN.
EnergyLevel energy(const PhysicalParams& params, const QuantumNumbers& qn);

// Builds eps = 2(n+1/2)a, D = 2(N+1), lambda = eps + D*(a +- b), then
// reconstructs E^2 by inverting the separation identity of the branch.
// Callers assert e2_reconstructed against energy().E2.
ChainCheck intermediates_consistency(const PhysicalParams& params,
                                     const QuantumNumbers& qn);

// Zero-field bracket K = (n' + 3/2 + ml -+ 3/2) a keyed on m_s, with
// n' = N + n.  Requires params.b == 0 (std::domain_error otherwise) and
// n_prime >= 0; ms must be +-1/2.
double zero_field_bracket(const PhysicalParams& params, int n_prime, int ml,
                          double ms);

// Levels whose E^2 lies within tol of target_e2, in input order.
// tol must be finite and >= 0 (0 selects exact matches).
std::vector<EnergyLevel> degeneracy(std::span<const EnergyLevel> levels,
                                    double target_e2, double tol);

// Transition-line tags: the canonical quanta plus "other".
inline constexpr std::string_view kTagA = "a";
inline constexpr std::string_view kTagB = "b";
inline constexpr std::string_view kTagAPlusB = "a+b";
inline constexpr std::string_view kTagAMinusB = "a-b";
inline constexpr std::string_view kTagOther = "other";

struct TransitionLine {
  std::size_t from;  // index into the input level list
  std::size_t to;
  double dK;
  std::string_view tag;
};

struct TransitionCatalog {
  std::array<double, 4> canonical;  // {a, b, a+b, a-b}
  std::vector<TransitionLine> lines;
};

// Catalog of bracket differences dK = K[to] - K[from] over all ordered level
// pairs, each tagged with the first canonical quantum it equals to within
// 1e-12 relative (unit floor), else "other".  The levels must all belong to
// one configuration (std::invalid_argument otherwise).
TransitionCatalog transition_lines(const PhysicalParams& params,
                                   std::span<const EnergyLevel> levels);

struct ScanRow {
  double b;
  double K;
  double E2;
  std::optional<double> E;  // empty when E2 < 0 (no real bound state)
};

// One row per requested b, in input order; rows in the E^2 < 0 regime are
// flagged instead of aborting the sweep.  b values must be finite and >= 0.
std::vector<ScanRow> scan_field(const PhysicalParams& base,
                                const QuantumNumbers& qn,
                                std::span<const double> b_values);

}  // namespace diracosc
