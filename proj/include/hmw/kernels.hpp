#pragma once

#include <cstddef>

namespace hmw::kernels {

/// Inner-loop evaluation of the loop integrands at batches of quadrature
/// nodes. Inputs are node positions (xs, ys) and parametric velocities
/// (txs, tys); output is one integrand value per node. Physical prefactors
/// (mu_e, s3, theta, ...) are applied by the caller on the integral value.
///
/// Every kernel exists as a scalar reference and, on x86-64, an AVX2 variant
/// performing the identical arithmetic per element; the two are required to
/// produce bit-identical results (the build disables FP contraction).

struct FilamentGeom {
  double cx = 0.0;
  double cy = 0.0;
  double coef = 0.0;  // lambda_m / (2 pi)
};

/// f = coef * (dx*ty - dy*tx) / r^2, the dipole coupling a . dr with the
/// overall 2 mu_e left out.
using TangentialFn = void (*)(const FilamentGeom&, const double* xs,
                              const double* ys, const double* txs,
                              const double* tys, double* out, std::size_t n);

/// f = G_k t_k with G_k = eps^{ij} eps^{lk} p_i d_j B_l and
/// p = (p0x, p0y) + vortex_coef * (B2, -B1).
struct GradContractParams {
  FilamentGeom geom;
  double p0x = 0.0;
  double p0y = 0.0;
  double vortex_coef = 0.0;
};
using GradContractFn = void (*)(const GradContractParams&, const double* xs,
                                const double* ys, const double* txs,
                                const double* tys, double* out, std::size_t n);

/// Same contraction with the constant part of p replaced by k_mag times the
/// unit tangent at each node.
struct TangentGradParams {
  FilamentGeom geom;
  double k_mag = 0.0;
  double vortex_coef = 0.0;
};
using TangentGradFn = void (*)(const TangentGradParams&, const double* xs,
                               const double* ys, const double* txs,
                               const double* tys, double* out, std::size_t n);

/// f = y*tx - x*ty  (integrates to -2 times the signed enclosed area).
using AreaFn = void (*)(const double* xs, const double* ys, const double* txs,
                        const double* tys, double* out, std::size_t n);

struct KernelTable {
  TangentialFn tangential;
  GradContractFn grad_contract;
  TangentGradFn grad_contract_tangent;
  AreaFn area;
  const char* name;
};

const KernelTable& scalar_kernels();
#if defined(HMW_KERNELS_AVX2)
const KernelTable& avx2_kernels();
#endif

enum class Backend { automatic, scalar, avx2 };

bool avx2_supported();

/// Force a backend (tests); Backend::automatic restores cpuid-based selection.
/// Throws ConfigError when forcing avx2 on hardware without it.
void set_backend(Backend b);
Backend configured_backend();

/// Table in effect under the configured backend.
const KernelTable& active_kernels();

}  // namespace hmw::kernels
