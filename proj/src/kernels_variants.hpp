#pragma once

// Internal declarations of the architecture-specific kernel variants.
// Definitions live in kernels_avx2.cpp / kernels_neon.cpp, which are only
// compiled on the matching architecture.

#include <span>

namespace diracosc::kernels::avx2 {
void sturm_counts(std::span<const double> diag,
                  std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts);
double weighted_dot(std::span<const double> w, std::span<const double> v);
void laguerre_grid(int k, int alpha, std::span<const double> x,
                   std::span<double> out);
void hermite_grid(int n, std::span<const double> y, std::span<double> out);
}  // namespace diracosc::kernels::avx2

namespace diracosc::kernels::neon {
void sturm_counts(std::span<const double> diag,
                  std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts);
double weighted_dot(std::span<const double> w, std::span<const double> v);
void laguerre_grid(int k, int alpha, std::span<const double> x,
                   std::span<double> out);
void hermite_grid(int n, std::span<const double> y, std::span<double> out);
}  // namespace diracosc::kernels::neon
