#pragma once

#include "hmw/geometry.hpp"
#include "hmw/nc_algebra.hpp"

namespace hmw::fields {

using geom::Vec2;

/// Points closer to the filament than this are treated as singular and fail
/// loudly; nothing is regularized.
inline constexpr double kSingularityEpsilon = 1e-9;

/// Infinitely long filament through `center`, perpendicular to the plane,
/// uniformly charged with magnetic monopoles of line density lambda_m.
/// In-plane field:  B(r) = lambda_m (r - center) / (2 pi |r - center|^2),
/// so the planar divergence is lambda_m * delta^2(r - center).
struct FilamentField {
  double lambda_m = 1.0;
  Vec2 center{};

  [[nodiscard]] double coef() const;  // lambda_m / (2 pi)
};

/// Field value and spatial gradient at a point. grad[j][l] = d_j B_l.
struct FieldSample {
  Vec2 at;
  Vec2 B;
  double grad[2][2];
};

/// Analytic field and gradient. Off the filament the gradient is traceless
/// and symmetric by construction: grad[0][0] == -grad[1][1] and
/// grad[0][1] == grad[1][0] hold exactly, so divergence and curl evaluate to
/// exactly zero. Throws SingularPointError within kSingularityEpsilon.
FieldSample eval_field(const FilamentField& f, Vec2 at);

/// Dual electromagnetic field tensor restricted to 2+1 indices:
///   row 0:  (0,  -B1, -B2)
///   row 1:  (B1,  0,  -E3)
///   row 2:  (B2,  E3,  0 )
struct DualFieldTensor {
  double m[3][3];
};

DualFieldTensor dual_tensor(Vec2 B, double E3 = 0.0);

/// alpha * F~ + Theta^{rho sigma} p_rho d_sigma F~ / (2 alpha) with the planar
/// Theta (only spatial rho, sigma contribute). alpha = 1 reduces to the plain
/// noncommutative-space shift F~ + theta eps^{ij} p_i d_j F~ / 2.
DualFieldTensor shifted_dual_tensor(const FilamentField& f, Vec2 at, Vec2 p,
                                    const nc::NCParams& params);

}  // namespace hmw::fields
