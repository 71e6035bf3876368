#include <atomic>

#include "hmw/errors.hpp"
#include "hmw/kernels.hpp"

namespace hmw::kernels {

namespace {
std::atomic<Backend> g_backend{Backend::automatic};
}

bool avx2_supported() {
#if defined(HMW_KERNELS_AVX2)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported()) {
    throw ConfigError("kernel backend avx2 is not supported on this machine");
  }
  g_backend.store(b);
}

Backend configured_backend() { return g_backend.load(); }

const KernelTable& active_kernels() {
  switch (g_backend.load()) {
    case Backend::scalar:
      return scalar_kernels();
    case Backend::avx2:
#if defined(HMW_KERNELS_AVX2)
      return avx2_kernels();
#else
      return scalar_kernels();
#endif
    case Backend::automatic:
    default:
#if defined(HMW_KERNELS_AVX2)
      if (avx2_supported()) return avx2_kernels();
#endif
      return scalar_kernels();
  }
}

}  // namespace hmw::kernels
