// NEON (aarch64) kernel variants, mirroring the scalar reference
// operation-for-operation per lane.

#include <arm_neon.h>

#include <cstdint>
#include <span>

#include "diracosc/kernels.hpp"
#include "kernels_variants.hpp"

namespace diracosc::kernels::neon {

void sturm_counts(std::span<const double> diag,
                  std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts) {
  const std::size_t n = diag.size();
  const float64x2_t vpiv = vdupq_n_f64(pivmin);
  const float64x2_t vnegpiv = vdupq_n_f64(-pivmin);
  const float64x2_t vzero = vdupq_n_f64(0.0);
  const float64x2_t vone = vdupq_n_f64(1.0);

  std::size_t j = 0;
  for (; j + 2 <= shifts.size(); j += 2) {
    const float64x2_t x = vld1q_f64(&shifts[j]);
    float64x2_t q = vsubq_f64(vdupq_n_f64(diag[0]), x);
    uint64x2_t small = vcltq_f64(vabsq_f64(q), vpiv);
    q = vbslq_f64(small, vnegpiv, q);
    float64x2_t cnt = vbslq_f64(vcleq_f64(q, vzero), vone, vzero);
    for (std::size_t i = 1; i < n; ++i) {
      const float64x2_t t = vsubq_f64(vdupq_n_f64(diag[i]), x);
      q = vsubq_f64(t, vdivq_f64(vdupq_n_f64(offdiag_sq[i - 1]), q));
      small = vcltq_f64(vabsq_f64(q), vpiv);
      q = vbslq_f64(small, vnegpiv, q);
      cnt = vaddq_f64(cnt, vbslq_f64(vcleq_f64(q, vzero), vone, vzero));
    }
    counts[j] = static_cast<int>(vgetq_lane_f64(cnt, 0));
    counts[j + 1] = static_cast<int>(vgetq_lane_f64(cnt, 1));
  }
  if (j < shifts.size())
    scalar::sturm_counts(diag, offdiag_sq, pivmin, shifts.subspan(j),
                         counts.subspan(j));
}

double weighted_dot(std::span<const double> w, std::span<const double> v) {
  float64x2_t acc = vdupq_n_f64(0.0);
  const std::size_t n = w.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(&w[i]), vld1q_f64(&v[i])));
  double sum = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) sum += w[i] * v[i];
  return sum;
}

void laguerre_grid(int k, int alpha, std::span<const double> x,
                   std::span<double> out) {
  const double al = static_cast<double>(alpha);
  const std::size_t n = x.size();
  std::size_t i = 0;
  if (k == 0) {
    for (; i < n; ++i) out[i] = 1.0;
    return;
  }
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xi = vld1q_f64(&x[i]);
    float64x2_t p0 = vdupq_n_f64(1.0);
    float64x2_t p1 = vsubq_f64(vdupq_n_f64(1.0 + al), xi);
    for (int j = 1; j < k; ++j) {
      const double jd = static_cast<double>(j);
      const float64x2_t c = vsubq_f64(vdupq_n_f64(2.0 * jd + 1.0 + al), xi);
      const float64x2_t p2 = vdivq_f64(
          vsubq_f64(vmulq_f64(c, p1), vmulq_f64(vdupq_n_f64(jd + al), p0)),
          vdupq_n_f64(jd + 1.0));
      p0 = p1;
      p1 = p2;
    }
    vst1q_f64(&out[i], p1);
  }
  if (i < n) scalar::laguerre_grid(k, alpha, x.subspan(i), out.subspan(i));
}

void hermite_grid(int n, std::span<const double> y, std::span<double> out) {
  const std::size_t m = y.size();
  std::size_t i = 0;
  if (n == 0) {
    for (; i < m; ++i) out[i] = 1.0;
    return;
  }
  for (; i + 2 <= m; i += 2) {
    const float64x2_t ty = vmulq_f64(vdupq_n_f64(2.0), vld1q_f64(&y[i]));
    float64x2_t p0 = vdupq_n_f64(1.0);
    float64x2_t p1 = ty;
    for (int j = 1; j < n; ++j) {
      const float64x2_t p2 = vsubq_f64(
          vmulq_f64(ty, p1),
          vmulq_f64(vdupq_n_f64(2.0 * static_cast<double>(j)), p0));
      p0 = p1;
      p1 = p2;
    }
    vst1q_f64(&out[i], p1);
  }
  if (i < m) scalar::hermite_grid(n, y.subspan(i), out.subspan(i));
}

}  // namespace diracosc::kernels::neon
