#include "diracosc/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "kernels_variants.hpp"

namespace diracosc::kernels {

namespace scalar {

void sturm_counts(std::span<const double> diag,
                  std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts) {
  const std::size_t n = diag.size();
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    const double x = shifts[j];
    double q = diag[0] - x;
    if (std::fabs(q) < pivmin) q = -pivmin;
    int c = q <= 0.0 ? 1 : 0;
    for (std::size_t i = 1; i < n; ++i) {
      q = (diag[i] - x) - offdiag_sq[i - 1] / q;
      if (std::fabs(q) < pivmin) q = -pivmin;
      if (q <= 0.0) ++c;
    }
    counts[j] = c;
  }
}

double weighted_dot(std::span<const double> w, std::span<const double> v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * v[i];
  return acc;
}

void laguerre_grid(int k, int alpha, std::span<const double> x,
                   std::span<double> out) {
  const double al = static_cast<double>(alpha);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (k == 0) {
      out[i] = 1.0;
      continue;
    }
    const double xi = x[i];
    double p0 = 1.0;
    double p1 = (1.0 + al) - xi;
    for (int j = 1; j < k; ++j) {
      const double jd = static_cast<double>(j);
      const double p2 =
          (((2.0 * jd + 1.0 + al) - xi) * p1 - (jd + al) * p0) / (jd + 1.0);
      p0 = p1;
      p1 = p2;
    }
    out[i] = p1;
  }
}

void hermite_grid(int n, std::span<const double> y, std::span<double> out) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (n == 0) {
      out[i] = 1.0;
      continue;
    }
    const double ty = 2.0 * y[i];
    double p0 = 1.0;
    double p1 = ty;
    for (int j = 1; j < n; ++j) {
      const double p2 = ty * p1 - (2.0 * static_cast<double>(j)) * p0;
      p0 = p1;
      p1 = p2;
    }
    out[i] = p1;
  }
}

}  // namespace scalar

namespace {

Isa detect() {
#ifdef DIRACOSC_HAVE_AVX2
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
#ifdef DIRACOSC_HAVE_NEON
  return Isa::neon;
#endif
  return Isa::scalar;
}

Isa& current() {
  static Isa isa = detect();
  return isa;
}

}  // namespace

Isa active() { return current(); }

bool supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#ifdef DIRACOSC_HAVE_AVX2
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#ifdef DIRACOSC_HAVE_NEON
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

void force(Isa isa) {
  if (!supported(isa))
    throw std::invalid_argument("kernel ISA not supported on this machine");
  current() = isa;
}

int lane_width() {
  switch (current()) {
    case Isa::avx2:
      return 4;
    case Isa::neon:
      return 2;
    default:
      return 1;
  }
}

void sturm_counts(std::span<const double> diag,
                  std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts) {
  switch (current()) {
#ifdef DIRACOSC_HAVE_AVX2
    case Isa::avx2:
      avx2::sturm_counts(diag, offdiag_sq, pivmin, shifts, counts);
      return;
#endif
#ifdef DIRACOSC_HAVE_NEON
    case Isa::neon:
      neon::sturm_counts(diag, offdiag_sq, pivmin, shifts, counts);
      return;
#endif
    default:
      scalar::sturm_counts(diag, offdiag_sq, pivmin, shifts, counts);
  }
}

double weighted_dot(std::span<const double> w, std::span<const double> v) {
  switch (current()) {
#ifdef DIRACOSC_HAVE_AVX2
    case Isa::avx2:
      return avx2::weighted_dot(w, v);
#endif
#ifdef DIRACOSC_HAVE_NEON
    case Isa::neon:
      return neon::weighted_dot(w, v);
#endif
    default:
      return scalar::weighted_dot(w, v);
  }
}

void laguerre_grid(int k, int alpha, std::span<const double> x,
                   std::span<double> out) {
  switch (current()) {
#ifdef DIRACOSC_HAVE_AVX2
    case Isa::avx2:
      avx2::laguerre_grid(k, alpha, x, out);
      return;
#endif
#ifdef DIRACOSC_HAVE_NEON
    case Isa::neon:
      neon::laguerre_grid(k, alpha, x, out);
      return;
#endif
    default:
      scalar::laguerre_grid(k, alpha, x, out);
  }
}

void hermite_grid(int n, std::span<const double> y, std::span<double> out) {
  switch (current()) {
#ifdef DIRACOSC_HAVE_AVX2
    case Isa::avx2:
      avx2::hermite_grid(n, y, out);
      return;
#endif
#ifdef DIRACOSC_HAVE_NEON
    case Isa::neon:
      neon::hermite_grid(n, y, out);
      return;
#endif
    default:
      scalar::hermite_grid(n, y, out);
  }
}

}  // namespace diracosc::kernels
