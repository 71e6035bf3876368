#include "hmw/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hmw/errors.hpp"

namespace hmw::fields {

double FilamentField::coef() const { return lambda_m / (2.0 * std::numbers::pi); }

FieldSample eval_field(const FilamentField& f, Vec2 at) {
  Vec2 d = at - f.center;
  double r2 = d.x * d.x + d.y * d.y;
  if (r2 <= kSingularityEpsilon * kSingularityEpsilon) {
    throw SingularPointError("eval_field: point (" + std::to_string(at.x) + ", " +
                             std::to_string(at.y) + ") is on the filament");
  }
  double c = f.coef();
  double cinv = c / r2;
  FieldSample s;
  s.at = at;
  s.B = {d.x * cinv, d.y * cinv};
  double inv2 = cinv / r2;  // c / r^4
  double d11 = (d.y * d.y - d.x * d.x) * inv2;
  double d12 = -2.0 * (d.x * d.y) * inv2;
  s.grad[0][0] = d11;
  s.grad[0][1] = d12;
  s.grad[1][0] = d12;
  s.grad[1][1] = -d11;
  return s;
}

DualFieldTensor dual_tensor(Vec2 B, double E3) {
  DualFieldTensor t{};
  t.m[0][1] = -B.x;
  t.m[0][2] = -B.y;
  t.m[1][0] = B.x;
  t.m[2][0] = B.y;
  t.m[1][2] = -E3;
  t.m[2][1] = E3;
  return t;
}

DualFieldTensor shifted_dual_tensor(const FilamentField& f, Vec2 at, Vec2 p,
                                    const nc::NCParams& params) {
  FieldSample s = eval_field(f, at);
  DualFieldTensor base = dual_tensor(s.B, 0.0);
  // d_j F~ entries follow from d_j B; the E3 slot is static.
  DualFieldTensor d1{}, d2{};
  d1.m[0][1] = -s.grad[0][0];
  d1.m[0][2] = -s.grad[0][1];
  d1.m[1][0] = s.grad[0][0];
  d1.m[2][0] = s.grad[0][1];
  d2.m[0][1] = -s.grad[1][0];
  d2.m[0][2] = -s.grad[1][1];
  d2.m[1][0] = s.grad[1][0];
  d2.m[2][0] = s.grad[1][1];
  // Theta^{12} = theta = -Theta^{21}: the contraction is theta (p_1 d_2 - p_2 d_1).
  double shift_coef = params.theta / (2.0 * params.alpha);
  DualFieldTensor out{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      out.m[a][b] = params.alpha * base.m[a][b] +
                    shift_coef * (p.x * d2.m[a][b] - p.y * d1.m[a][b]);
    }
  }
  return out;
}

}  // namespace hmw::fields
