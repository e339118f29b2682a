#pragma once

#include <cstddef>
#include <cstdint>

// Dense arithmetic over F_p on uint32 lanes. Every backend computes exactly
// the same values; the vector backends handle p <= kVectorMaxModulus in
// registers and hand larger moduli to the scalar code.
namespace qhom::kernels {

enum class Backend { Scalar, Avx2, Neon };

const char* to_string(Backend b);

inline constexpr std::uint32_t kVectorMaxModulus = 1u << 15;

struct ModpKernels {
  Backend backend;
  // dst[i] = (dst[i] + factor * src[i]) mod p
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
               std::size_t n);
  // v[i] = (factor * v[i]) mod p
  void (*scale)(std::uint32_t* v, std::uint32_t factor, std::uint32_t p, std::size_t n);
  // index of the first nonzero entry, or n
  std::size_t (*find_nonzero)(const std::uint32_t* v, std::size_t n);
};

const ModpKernels& scalar_kernels();
// nullptr when the backend was not compiled in or the CPU lacks it.
const ModpKernels* backend_kernels(Backend b);
bool backend_available(Backend b);

// Kernels chosen from CPU features on first use.
const ModpKernels& active_kernels();
// Pins the active backend (tests and benchmarks). Returns false if the
// backend is unavailable; the previous choice is then kept.
bool force_backend(Backend b);
void reset_backend();

}  // namespace qhom::kernels
