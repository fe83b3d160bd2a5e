// AVX2+FMA variants of the inner-loop kernels. Compiled with -mavx2 -mfma;
// only reached when kernels.cpp dispatched here after a cpuid check.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>

#include "speclap/kernels.hpp"

namespace speclap::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

}  // namespace

void rotate_pair_avx2(double* x, double* y, std::size_t len, double c, double s) {
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sv = _mm256_set1_pd(s);
  std::size_t k = 0;
  for (; k + 4 <= len; k += 4) {
    const __m256d xv = _mm256_loadu_pd(x + k);
    const __m256d yv = _mm256_loadu_pd(y + k);
    _mm256_storeu_pd(x + k, _mm256_fmsub_pd(cv, xv, _mm256_mul_pd(sv, yv)));
    _mm256_storeu_pd(y + k, _mm256_fmadd_pd(sv, xv, _mm256_mul_pd(cv, yv)));
  }
  for (; k < len; ++k) {
    const double xk = x[k];
    const double yk = y[k];
    x[k] = c * xk - s * yk;
    y[k] = s * xk + c * yk;
  }
}

double dot_avx2(const double* a, const double* b, std::size_t len) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= len; k += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc);
  }
  double tail = 0.0;
  for (; k < len; ++k) tail += a[k] * b[k];
  return hsum(acc) + tail;
}

double pair_energy_avx2(const double* z, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const __m256d zi = _mm256_set1_pd(z[i]);
    __m256d row = _mm256_setzero_pd();
    std::size_t j = i + 1;
    for (; j + 4 <= n; j += 4) {
      const __m256d d = _mm256_sub_pd(zi, _mm256_loadu_pd(z + j));
      row = _mm256_fmadd_pd(d, d, row);
    }
    double tail = 0.0;
    for (; j < n; ++j) {
      const double d = z[i] - z[j];
      tail += d * d;
    }
    acc += hsum(row) + tail;
  }
  return acc;
}

double min_pair_energy_avx2(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const __m256d xi = _mm256_set1_pd(x[i]);
    const __m256d yi = _mm256_set1_pd(y[i]);
    __m256d row = _mm256_setzero_pd();
    std::size_t j = i + 1;
    for (; j + 4 <= n; j += 4) {
      const __m256d dx = _mm256_sub_pd(xi, _mm256_loadu_pd(x + j));
      const __m256d dy = _mm256_sub_pd(yi, _mm256_loadu_pd(y + j));
      row = _mm256_add_pd(row, _mm256_min_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
    }
    double tail = 0.0;
    for (; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      const double a = dx * dx;
      const double b = dy * dy;
      tail += a < b ? a : b;
    }
    acc += hsum(row) + tail;
  }
  return acc;
}

double product_pair_energy_avx2(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const __m256d xi = _mm256_set1_pd(x[i]);
    const __m256d yi = _mm256_set1_pd(y[i]);
    __m256d row = _mm256_setzero_pd();
    std::size_t j = i + 1;
    for (; j + 4 <= n; j += 4) {
      const __m256d dx = _mm256_sub_pd(xi, _mm256_loadu_pd(x + j));
      const __m256d dy = _mm256_sub_pd(yi, _mm256_loadu_pd(y + j));
      row = _mm256_fmadd_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy), row);
    }
    double tail = 0.0;
    for (; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      tail += (dx * dx) * (dy * dy);
    }
    acc += hsum(row) + tail;
  }
  return acc;
}

}  // namespace speclap::kernels::detail

#endif  // x86-64
