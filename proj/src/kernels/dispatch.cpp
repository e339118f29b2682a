#include <atomic>

#include "modp_impl.hpp"

namespace qhom::kernels {

const char* to_string(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "scalar";
}

namespace {

constexpr ModpKernels kScalar{Backend::Scalar, detail::axpy_scalar, detail::scale_scalar,
                              detail::find_nonzero_scalar};
#if defined(QHOM_HAVE_AVX2_KERNELS)
constexpr ModpKernels kAvx2{Backend::Avx2, detail::axpy_avx2, detail::scale_avx2, detail::find_nonzero_avx2};
#endif
#if defined(QHOM_HAVE_NEON_KERNELS)
constexpr ModpKernels kNeon{Backend::Neon, detail::axpy_neon, detail::scale_neon, detail::find_nonzero_neon};
#endif

const ModpKernels* detect() {
#if defined(QHOM_HAVE_AVX2_KERNELS)
  if (backend_available(Backend::Avx2)) return &kAvx2;
#endif
#if defined(QHOM_HAVE_NEON_KERNELS)
  return &kNeon;
#endif
  return &kScalar;
}

std::atomic<const ModpKernels*>& active_slot() {
  static std::atomic<const ModpKernels*> slot{detect()};
  return slot;
}

}  // namespace

const ModpKernels& scalar_kernels() { return kScalar; }

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(QHOM_HAVE_AVX2_KERNELS)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(QHOM_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const ModpKernels* backend_kernels(Backend b) {
  if (!backend_available(b)) return nullptr;
  switch (b) {
    case Backend::Scalar: return &kScalar;
#if defined(QHOM_HAVE_AVX2_KERNELS)
    case Backend::Avx2: return &kAvx2;
#endif
#if defined(QHOM_HAVE_NEON_KERNELS)
    case Backend::Neon: return &kNeon;
#endif
    default: return nullptr;
  }
}

const ModpKernels& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

bool force_backend(Backend b) {
  const ModpKernels* k = backend_kernels(b);
  if (k == nullptr) return false;
  active_slot().store(k, std::memory_order_release);
  return true;
}

void reset_backend() { active_slot().store(detect(), std::memory_order_release); }

}  // namespace qhom::kernels
