// Compiled with -mavx2 -mfma; reached only through the dispatcher after a
// CPUID check.
#include <immintrin.h>

#include "modp_impl.hpp"

namespace qhom::kernels::detail {

namespace {

// t holds 8 values below 2^30. Quotients come from a double-precision
// reciprocal and are corrected by at most one step either way.
inline __m256i reduce8(__m256i t, __m256i p, __m256d pd, __m256d invp) {
  const __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(t));
  const __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(t, 1));
  const __m256d qlo = _mm256_floor_pd(_mm256_mul_pd(lo, invp));
  const __m256d qhi = _mm256_floor_pd(_mm256_mul_pd(hi, invp));
  const __m256d rlo = _mm256_fnmadd_pd(qlo, pd, lo);
  const __m256d rhi = _mm256_fnmadd_pd(qhi, pd, hi);
  __m256i r = _mm256_set_m128i(_mm256_cvttpd_epi32(rhi), _mm256_cvttpd_epi32(rlo));
  // r in (-p, 2p)
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), p));
  const __m256i pm1 = _mm256_sub_epi32(p, _mm256_set1_epi32(1));
  r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, pm1), p));
  return r;
}

}  // namespace

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
               std::size_t n) {
  if (p > kVectorMaxModulus) return axpy_scalar(dst, src, factor, p, n);
  factor %= p;
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256i f = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i pi = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(f, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce8(t, pi, pd, invp));
  }
  axpy_scalar(dst + i, src + i, factor, p, n - i);
}

void scale_avx2(std::uint32_t* v, std::uint32_t factor, std::uint32_t p, std::size_t n) {
  if (p > kVectorMaxModulus) return scale_scalar(v, factor, p, n);
  factor %= p;
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256i f = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i pi = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), reduce8(_mm256_mullo_epi32(f, x), pi, pd, invp));
  }
  scale_scalar(v + i, factor, p, n - i);
}

std::size_t find_nonzero_avx2(const std::uint32_t* v, std::size_t n) {
  std::size_t i = 0;
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const unsigned zero_mask =
        static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, zero))));
    if (zero_mask != 0xFFu) return i + static_cast<std::size_t>(__builtin_ctz(~zero_mask & 0xFFu));
  }
  return i + find_nonzero_scalar(v + i, n - i);
}

}  // namespace qhom::kernels::detail
