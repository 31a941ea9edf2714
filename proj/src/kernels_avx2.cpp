// AVX2 kernel variants.  Each mirrors the scalar reference operation-for-
// operation (no FMA contraction) so that per-lane results are bit-identical;
// only weighted_dot reassociates the accumulation.

#include <immintrin.h>

#include <cstdint>
#include <span>

#include "diracosc/kernels.hpp"
#include "kernels_variants.hpp"

namespace diracosc::kernels::avx2 {

namespace {
const __m256d kAbsMask =
    _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
}

void sturm_counts(std::span<const double> diag,
                  std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts) {
  const std::size_t n = diag.size();
  const __m256d vpiv = _mm256_set1_pd(pivmin);
  const __m256d vnegpiv = _mm256_set1_pd(-pivmin);
  const __m256d vzero = _mm256_setzero_pd();
  const __m256d vone = _mm256_set1_pd(1.0);

  std::size_t j = 0;
  for (; j + 4 <= shifts.size(); j += 4) {
    const __m256d x = _mm256_loadu_pd(&shifts[j]);
    __m256d q = _mm256_sub_pd(_mm256_set1_pd(diag[0]), x);
    __m256d small = _mm256_cmp_pd(_mm256_and_pd(q, kAbsMask), vpiv, _CMP_LT_OQ);
    q = _mm256_blendv_pd(q, vnegpiv, small);
    __m256d cnt = _mm256_and_pd(_mm256_cmp_pd(q, vzero, _CMP_LE_OQ), vone);
    for (std::size_t i = 1; i < n; ++i) {
      const __m256d t = _mm256_sub_pd(_mm256_set1_pd(diag[i]), x);
      q = _mm256_sub_pd(t, _mm256_div_pd(_mm256_set1_pd(offdiag_sq[i - 1]), q));
      small = _mm256_cmp_pd(_mm256_and_pd(q, kAbsMask), vpiv, _CMP_LT_OQ);
      q = _mm256_blendv_pd(q, vnegpiv, small);
      cnt = _mm256_add_pd(cnt,
                          _mm256_and_pd(_mm256_cmp_pd(q, vzero, _CMP_LE_OQ), vone));
    }
    double buf[4];
    _mm256_storeu_pd(buf, cnt);
    for (int l = 0; l < 4; ++l) counts[j + l] = static_cast<int>(buf[l]);
  }
  if (j < shifts.size())
    scalar::sturm_counts(diag, offdiag_sq, pivmin, shifts.subspan(j),
                         counts.subspan(j));
}

double weighted_dot(std::span<const double> w, std::span<const double> v) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n = w.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(&w[i]), _mm256_loadu_pd(&v[i])));
  }
  double buf[4];
  _mm256_storeu_pd(buf, acc);
  double sum = (buf[0] + buf[1]) + (buf[2] + buf[3]);
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
  const __m256d vone = _mm256_set1_pd(1.0);
  for (; i + 4 <= n; i += 4) {
    const __m256d xi = _mm256_loadu_pd(&x[i]);
    __m256d p0 = vone;
    __m256d p1 = _mm256_sub_pd(_mm256_set1_pd(1.0 + al), xi);
    for (int j = 1; j < k; ++j) {
      const double jd = static_cast<double>(j);
      const __m256d c = _mm256_sub_pd(_mm256_set1_pd(2.0 * jd + 1.0 + al), xi);
      const __m256d p2 = _mm256_div_pd(
          _mm256_sub_pd(_mm256_mul_pd(c, p1),
                        _mm256_mul_pd(_mm256_set1_pd(jd + al), p0)),
          _mm256_set1_pd(jd + 1.0));
      p0 = p1;
      p1 = p2;
    }
    _mm256_storeu_pd(&out[i], p1);
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
  const __m256d vone = _mm256_set1_pd(1.0);
  const __m256d vtwo = _mm256_set1_pd(2.0);
  for (; i + 4 <= m; i += 4) {
    const __m256d ty = _mm256_mul_pd(vtwo, _mm256_loadu_pd(&y[i]));
    __m256d p0 = vone;
    __m256d p1 = ty;
    for (int j = 1; j < n; ++j) {
      const __m256d p2 = _mm256_sub_pd(
          _mm256_mul_pd(ty, p1),
          _mm256_mul_pd(_mm256_set1_pd(2.0 * static_cast<double>(j)), p0));
      p0 = p1;
      p1 = p2;
    }
    _mm256_storeu_pd(&out[i], p1);
  }
  if (i < m) scalar::hermite_grid(n, y.subspan(i), out.subspan(i));
}

}  // namespace diracosc::kernels::avx2
