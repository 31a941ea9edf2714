#pragma once

// Polynomial recurrences and quadrature used by wavefunction construction and
// normalization.  Direct upward recursion, double precision; the degrees in
// scope stay small (<= ~50) and the property tests in tests/test_special.cpp
// guard accuracy.  All functions are stateless and pure.

#include <span>

namespace diracosc {

// Physicists' Hermite polynomial H_n(y) via H_{k+1} = 2y H_k - 2k H_{k-1}.
// Throws std::domain_error for n < 0.
double hermite(int n, double y);

// Associated Laguerre polynomial L_k^alpha(x) via
// (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
// alpha is restricted to non-negative integers (the radial solutions use
// alpha = |ml|).  Throws std::domain_error for k < 0 or alpha < 0.
double laguerre_assoc(int k, int alpha, double x);

// Integral of sampled values over the grid nodes.  Uniform grids use
// composite Simpson (odd node counts) with a trapezoid fallback on the last
// panel (even counts); non-uniform grids fall back to the trapezoid rule.
// Requires a strictly increasing grid of at least 3 nodes matching the value
// count; throws std::domain_error otherwise.
double integrate(std::span<const double> values, std::span<const double> grid);

}  // namespace diracosc
