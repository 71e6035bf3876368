#include "kernels_detail.hpp"

namespace hmw::kernels {

namespace {

void tangential(const FilamentGeom& g, const double* xs, const double* ys,
                const double* txs, const double* tys, double* out,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = detail::tangential_point(g, xs[i], ys[i], txs[i], tys[i]);
  }
}

void grad_contract(const GradContractParams& p, const double* xs,
                   const double* ys, const double* txs, const double* tys,
                   double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = detail::grad_contract_point(p.geom, p.p0x, p.p0y, p.vortex_coef,
                                         xs[i], ys[i], txs[i], tys[i]);
  }
}

void grad_contract_tangent(const TangentGradParams& p, const double* xs,
                           const double* ys, const double* txs,
                           const double* tys, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = detail::tangent_grad_point(p, xs[i], ys[i], txs[i], tys[i]);
  }
}

void area(const double* xs, const double* ys, const double* txs,
          const double* tys, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = detail::area_point(xs[i], ys[i], txs[i], tys[i]);
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{tangential, grad_contract,
                                 grad_contract_tangent, area, "scalar"};
  return table;
}

}  // namespace hmw::kernels
