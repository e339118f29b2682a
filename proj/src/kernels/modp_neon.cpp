#include <arm_neon.h>

#include "modp_impl.hpp"

namespace qhom::kernels::detail {

namespace {

inline uint32x4_t reduce4(uint32x4_t t, std::uint32_t p, float64x2_t invp) {
  const float64x2_t lo = vcvtq_f64_u64(vmovl_u32(vget_low_u32(t)));
  const float64x2_t hi = vcvtq_f64_u64(vmovl_u32(vget_high_u32(t)));
  const uint64x2_t qlo = vcvtq_u64_f64(vrndmq_f64(vmulq_f64(lo, invp)));
  const uint64x2_t qhi = vcvtq_u64_f64(vrndmq_f64(vmulq_f64(hi, invp)));
  const uint32x4_t q = vcombine_u32(vmovn_u64(qlo), vmovn_u64(qhi));
  int32x4_t r = vreinterpretq_s32_u32(vmlsq_n_u32(t, q, p));
  const int32x4_t pv = vdupq_n_s32(static_cast<int>(p));
  r = vaddq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcltq_s32(r, vdupq_n_s32(0))), pv));
  r = vsubq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcgeq_s32(r, pv)), pv));
  return vreinterpretq_u32_s32(r);
}

}  // namespace

void axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
               std::size_t n) {
  if (p > kVectorMaxModulus) return axpy_scalar(dst, src, factor, p, n);
  factor %= p;
  const float64x2_t invp = vdupq_n_f64(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t t = vmlaq_n_u32(vld1q_u32(dst + i), vld1q_u32(src + i), factor);
    vst1q_u32(dst + i, reduce4(t, p, invp));
  }
  axpy_scalar(dst + i, src + i, factor, p, n - i);
}

void scale_neon(std::uint32_t* v, std::uint32_t factor, std::uint32_t p, std::size_t n) {
  if (p > kVectorMaxModulus) return scale_scalar(v, factor, p, n);
  factor %= p;
  const float64x2_t invp = vdupq_n_f64(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vst1q_u32(v + i, reduce4(vmulq_n_u32(vld1q_u32(v + i), factor), p, invp));
  scale_scalar(v + i, factor, p, n - i);
}

std::size_t find_nonzero_neon(const std::uint32_t* v, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    if (vmaxvq_u32(vld1q_u32(v + i)) != 0) break;
  }
  return i + find_nonzero_scalar(v + i, n - i);
}

}  // namespace qhom::kernels::detail
