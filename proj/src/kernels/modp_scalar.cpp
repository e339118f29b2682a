#include "modp_impl.hpp"

namespace qhom::kernels::detail {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                 std::size_t n) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
  }
}

void scale_scalar(std::uint32_t* v, std::uint32_t factor, std::uint32_t p, std::size_t n) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>((f * v[i]) % p);
}

std::size_t find_nonzero_scalar(const std::uint32_t* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] != 0) return i;
  return n;
}

}  // namespace qhom::kernels::detail
