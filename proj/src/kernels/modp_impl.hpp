#pragma once

#include "qhom/kernels/modp_kernels.hpp"

namespace qhom::kernels::detail {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                 std::size_t n);
void scale_scalar(std::uint32_t* v, std::uint32_t factor, std::uint32_t p, std::size_t n);
std::size_t find_nonzero_scalar(const std::uint32_t* v, std::size_t n);

#if defined(QHOM_HAVE_AVX2_KERNELS)
void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
               std::size_t n);
void scale_avx2(std::uint32_t* v, std::uint32_t factor, std::uint32_t p, std::size_t n);
std::size_t find_nonzero_avx2(const std::uint32_t* v, std::size_t n);
#endif

#if defined(QHOM_HAVE_NEON_KERNELS)
void axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
               std::size_t n);
void scale_neon(std::uint32_t* v, std::uint32_t factor, std::uint32_t p, std::size_t n);
std::size_t find_nonzero_neon(const std::uint32_t* v, std::size_t n);
#endif

}  // namespace qhom::kernels::detail
