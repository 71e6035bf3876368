#if defined(HMW_KERNELS_AVX2)

#include <immintrin.h>

#include "kernels_detail.hpp"

// 4-wide AVX2 variants. Each vector body performs the same IEEE operations in
// the same order as the matching *_point function in kernels_detail.hpp; the
// remainder (< 4 nodes) falls through to those functions. No FMA is used, so
// results match the scalar kernels bit for bit.

namespace hmw::kernels {

namespace {

struct FieldRegs {
  __m256d dx, dy, r2, cinv;
};

inline FieldRegs field_common(const FilamentGeom& g, const double* xs,
                              const double* ys, std::size_t i) {
  FieldRegs f;
  __m256d x = _mm256_loadu_pd(xs + i);
  __m256d y = _mm256_loadu_pd(ys + i);
  f.dx = _mm256_sub_pd(x, _mm256_set1_pd(g.cx));
  f.dy = _mm256_sub_pd(y, _mm256_set1_pd(g.cy));
  f.r2 = _mm256_add_pd(_mm256_mul_pd(f.dx, f.dx), _mm256_mul_pd(f.dy, f.dy));
  f.cinv = _mm256_div_pd(_mm256_set1_pd(g.coef), f.r2);
  return f;
}

inline __m256d grad_contract_vec(const FilamentGeom& g, __m256d p0x, __m256d p0y,
                                 __m256d vc, const double* xs, const double* ys,
                                 const double* txs, const double* tys,
                                 std::size_t i) {
  FieldRegs f = field_common(g, xs, ys, i);
  __m256d tx = _mm256_loadu_pd(txs + i);
  __m256d ty = _mm256_loadu_pd(tys + i);
  __m256d b1 = _mm256_mul_pd(f.dx, f.cinv);
  __m256d b2 = _mm256_mul_pd(f.dy, f.cinv);
  __m256d inv2 = _mm256_div_pd(f.cinv, f.r2);
  __m256d d11 = _mm256_mul_pd(
      _mm256_sub_pd(_mm256_mul_pd(f.dy, f.dy), _mm256_mul_pd(f.dx, f.dx)), inv2);
  __m256d d12 = _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(f.dx, f.dy), inv2),
                              _mm256_set1_pd(-2.0));
  __m256d p1 = _mm256_add_pd(p0x, _mm256_mul_pd(vc, b2));
  __m256d p2 = _mm256_sub_pd(p0y, _mm256_mul_pd(vc, b1));
  __m256d g1 = _mm256_add_pd(_mm256_mul_pd(p1, d11), _mm256_mul_pd(p2, d12));
  __m256d g2 = _mm256_sub_pd(_mm256_mul_pd(p1, d12), _mm256_mul_pd(p2, d11));
  return _mm256_add_pd(_mm256_mul_pd(g1, tx), _mm256_mul_pd(g2, ty));
}

void tangential(const FilamentGeom& g, const double* xs, const double* ys,
                const double* txs, const double* tys, double* out,
                std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    FieldRegs f = field_common(g, xs, ys, i);
    __m256d tx = _mm256_loadu_pd(txs + i);
    __m256d ty = _mm256_loadu_pd(tys + i);
    __m256d num =
        _mm256_sub_pd(_mm256_mul_pd(f.dx, ty), _mm256_mul_pd(f.dy, tx));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(num, f.cinv));
  }
  for (; i < n; ++i) {
    out[i] = detail::tangential_point(g, xs[i], ys[i], txs[i], tys[i]);
  }
}

void grad_contract(const GradContractParams& p, const double* xs,
                   const double* ys, const double* txs, const double* tys,
                   double* out, std::size_t n) {
  __m256d p0x = _mm256_set1_pd(p.p0x);
  __m256d p0y = _mm256_set1_pd(p.p0y);
  __m256d vc = _mm256_set1_pd(p.vortex_coef);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i,
                     grad_contract_vec(p.geom, p0x, p0y, vc, xs, ys, txs, tys, i));
  }
  for (; i < n; ++i) {
    out[i] = detail::grad_contract_point(p.geom, p.p0x, p.p0y, p.vortex_coef,
                                         xs[i], ys[i], txs[i], tys[i]);
  }
}

void grad_contract_tangent(const TangentGradParams& p, const double* xs,
                           const double* ys, const double* txs,
                           const double* tys, double* out, std::size_t n) {
  __m256d kmag = _mm256_set1_pd(p.k_mag);
  __m256d vc = _mm256_set1_pd(p.vortex_coef);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d tx = _mm256_loadu_pd(txs + i);
    __m256d ty = _mm256_loadu_pd(tys + i);
    __m256d tn2 = _mm256_add_pd(_mm256_mul_pd(tx, tx), _mm256_mul_pd(ty, ty));
    __m256d kfac = _mm256_div_pd(kmag, _mm256_sqrt_pd(tn2));
    __m256d p0x = _mm256_mul_pd(kfac, tx);
    __m256d p0y = _mm256_mul_pd(kfac, ty);
    _mm256_storeu_pd(out + i,
                     grad_contract_vec(p.geom, p0x, p0y, vc, xs, ys, txs, tys, i));
  }
  for (; i < n; ++i) {
    out[i] = detail::tangent_grad_point(p, xs[i], ys[i], txs[i], tys[i]);
  }
}

void area(const double* xs, const double* ys, const double* txs,
          const double* tys, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(xs + i);
    __m256d y = _mm256_loadu_pd(ys + i);
    __m256d tx = _mm256_loadu_pd(txs + i);
    __m256d ty = _mm256_loadu_pd(tys + i);
    _mm256_storeu_pd(
        out + i, _mm256_sub_pd(_mm256_mul_pd(y, tx), _mm256_mul_pd(x, ty)));
  }
  for (; i < n; ++i) {
    out[i] = detail::area_point(xs[i], ys[i], txs[i], tys[i]);
  }
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{tangential, grad_contract,
                                 grad_contract_tangent, area, "avx2"};
  return table;
}

}  // namespace hmw::kernels

#endif  // HMW_KERNELS_AVX2
