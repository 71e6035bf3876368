#pragma once

#include <cmath>

#include "hmw/kernels.hpp"

// Per-element arithmetic shared by the scalar kernels and the AVX2 tail
// loops. The AVX2 vector bodies mirror these operation sequences exactly;
// any change here must be reflected there to keep the variants bit-identical.

namespace hmw::kernels::detail {

inline double tangential_point(const FilamentGeom& g, double x, double y,
                               double tx, double ty) {
  double dx = x - g.cx;
  double dy = y - g.cy;
  double r2 = dx * dx + dy * dy;
  double cinv = g.coef / r2;
  return (dx * ty - dy * tx) * cinv;
}

inline double grad_contract_point(const FilamentGeom& g, double p0x, double p0y,
                                  double vc, double x, double y, double tx,
                                  double ty) {
  double dx = x - g.cx;
  double dy = y - g.cy;
  double r2 = dx * dx + dy * dy;
  double cinv = g.coef / r2;
  double b1 = dx * cinv;
  double b2 = dy * cinv;
  double inv2 = cinv / r2;
  double d11 = (dy * dy - dx * dx) * inv2;
  double d12 = ((dx * dy) * inv2) * -2.0;
  double p1 = p0x + vc * b2;
  double p2 = p0y - vc * b1;
  double g1 = p1 * d11 + p2 * d12;
  double g2 = p1 * d12 - p2 * d11;
  return g1 * tx + g2 * ty;
}

inline double tangent_grad_point(const TangentGradParams& p, double x, double y,
                                 double tx, double ty) {
  double tn2 = tx * tx + ty * ty;
  double kfac = p.k_mag / std::sqrt(tn2);
  return grad_contract_point(p.geom, kfac * tx, kfac * ty, p.vortex_coef, x, y,
                             tx, ty);
}

inline double area_point(double x, double y, double tx, double ty) {
  return y * tx - x * ty;
}

}  // namespace hmw::kernels::detail
