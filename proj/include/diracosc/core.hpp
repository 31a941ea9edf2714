#pragma once

// Physical parameters, quantum numbers and state enumeration for the Dirac
// oscillator in a uniform axial magnetic field.
//
// Internal unit system: hbar = c = 1 and energies in units of m c^2, so the
// model is fully described by two dimensionless ratios,
//   a = hbar*omega   / (m c^2)   (oscillator quantum over rest energy)
//   b = hbar*omega_L / (m c^2)   (Larmor quantum over rest energy).
// SI enters only through larmor_from_field().
//
// All types are immutable after construction and all operations are pure, so
// everything here is safe to share across threads and to map over in parallel.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diracosc {

struct PhysicalParams {
  double a = 1.0;            // hbar*omega / mc^2, > 0
  double b = 0.0;            // hbar*omega_L / mc^2, >= 0
  double rest_energy = 1.0;  // mc^2 in the caller's output unit, > 0

  // Validating constructor; throws std::domain_error on a <= 0, b < 0,
  // rest_energy <= 0 or non-finite input.
  static PhysicalParams make(double a, double b, double rest_energy = 1.0);
};

// The two spinor ansatz configurations.  ConfigI assigns m_s = -1/2 to the
// upper two-component spinor (planar frequency omega + omega_L); ConfigII
// assigns m_s = +1/2 to the upper spinor (planar frequency omega - omega_L).
enum class Configuration { I, II };

// Upper (psi_a) or lower (psi_b) two-component spinor.
enum class Component { Upper, Lower };

struct QuantumNumbers {
  Configuration config = Configuration::I;
  Component component = Component::Upper;
  int N = 0;   // planar principal quantum number, >= 0
  int n = 0;   // axial quantum number, >= 0
  int ml = 0;  // orbital magnetic quantum number, |ml| <= N, N - |ml| even

  // Spin projection fixed by (config, component): -1/2 for (I, Upper) and
  // (II, Lower), +1/2 otherwise.
  double ms() const;
  // Radial node count k = (N - |ml|)/2.
  int k() const;
  // Combined oscillator quantum n' = N + n (the zero-field label).
  int n_prime() const { return N + n; }

  // Validating constructor; throws std::domain_error when N < 0, n < 0,
  // |ml| > N or N - |ml| is odd.
  static QuantumNumbers make(Configuration config, Component component, int N,
                             int n, int ml);
};

// Throws std::domain_error if qn violates the QuantumNumbers invariants.
void validate(const QuantumNumbers& qn);

// Raised when a branch formula yields E^2 < m^2 c^4 with no real bound state
// (ConfigII with omega_L sufficiently exceeding omega), or when the planar
// confinement is lost (xi_scale with a - b <= 0).  Carries the offending
// value and, when available, the quantum numbers.
class NoRealBoundState : public std::domain_error {
 public:
  NoRealBoundState(const std::string& what, double value,
                   std::optional<QuantumNumbers> qn = std::nullopt)
      : std::domain_error(what), value(value), qn(qn) {}

  double value;  // E^2/(mc^2)^2 or the failing planar quantum
  std::optional<QuantumNumbers> qn;
};

// Larmor angular frequency omega_L = qB/(2m) in rad/s from SI inputs.
// Throws std::domain_error on B < 0, mass <= 0, charge <= 0 or non-finite
// input.
double larmor_from_field(double b_tesla, double mass_kg,
                         double charge_coulomb);

struct SpinPlanar {
  double ms;      // +-1/2
  double planar;  // a + b for ConfigI, a - b for ConfigII
};
SpinPlanar spin_and_planar(Configuration config, Component component,
                           const PhysicalParams& params);

// All valid states with 0 <= N <= max_N, 0 <= n <= max_n and
// ml in {-N, -N+2, ..., N}, for each requested (config, component) pair.
// Deterministic ordering: config, component, N, n, ml ascending; duplicate
// entries in the request sets are ignored.  Empty request sets yield an
// empty list.
std::vector<QuantumNumbers> enumerate_states(
    int max_N, int max_n, std::span<const Configuration> configs,
    std::span<const Component> components);

}  // namespace diracosc
