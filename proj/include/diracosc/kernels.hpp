#pragma once

// Inner-loop kernels with a scalar reference implementation and SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected at runtime.  Every variant is
// equivalence-tested against the scalar reference in tests/test_kernels.cpp:
// Sturm counts must agree exactly, polynomial recurrences bit-for-bit, and
// reductions to tight relative tolerance.

#include <cstdint>
#include <span>
#include <string_view>

namespace diracosc::kernels {

enum class Isa { scalar, avx2, neon };

// ISA chosen for this process (CPU feature detection, done once).
Isa active();
bool supported(Isa isa);
std::string_view name(Isa isa);

// Override the dispatch choice; throws std::invalid_argument if `isa` is not
// supported on this machine.  Intended for equivalence tests and benchmarks.
void force(Isa isa);

// Doubles per vector register on the active path (1 for scalar).
int lane_width();

// Writes to counts[j] the number of eigenvalues of the symmetric tridiagonal
// matrix (diag, offdiag) that are <= shifts[j].  offdiag_sq holds the squared
// off-diagonal entries (size diag.size()-1); pivmin guards the recurrence
// against vanishing pivots.  One independent Sturm recurrence per shift, so
// SIMD variants batch shifts across lanes.
void sturm_counts(std::span<const double> diag,
                  std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts);

// sum_i w[i] * v[i]
double weighted_dot(std::span<const double> w, std::span<const double> v);

// Associated Laguerre polynomial L_k^alpha evaluated at each x[i] -> out[i]
// by upward three-term recurrence.  Requires k >= 0, alpha >= 0.
void laguerre_grid(int k, int alpha, std::span<const double> x,
                   std::span<double> out);

// Physicists' Hermite polynomial H_n at each y[i] -> out[i].  Requires n >= 0.
void hermite_grid(int n, std::span<const double> y, std::span<double> out);

// Scalar reference path, always available regardless of dispatch state.
namespace scalar {
void sturm_counts(std::span<const double> diag,
                  std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts);
double weighted_dot(std::span<const double> w, std::span<const double> v);
void laguerre_grid(int k, int alpha, std::span<const double> x,
                   std::span<double> out);
void hermite_grid(int n, std::span<const double> y, std::span<double> out);
}  // namespace scalar

}  // namespace diracosc::kernels
