#include "hmw/phase.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hmw/errors.hpp"
#include "hmw/kernels.hpp"

namespace hmw::phase {

namespace {

using kernels::FilamentGeom;

FilamentGeom geom_of(const FilamentField& f) {
  return {f.center.x, f.center.y, f.coef()};
}

class TangentialIntegrand final : public quad::BatchIntegrand {
 public:
  explicit TangentialIntegrand(FilamentGeom g) : g_(g) {}
  void eval(const double* xs, const double* ys, const double* txs,
            const double* tys, double* out, std::size_t n) const override {
    kernels::active_kernels().tangential(g_, xs, ys, txs, tys, out, n);
  }

 private:
  FilamentGeom g_;
};

class GradContractIntegrand final : public quad::BatchIntegrand {
 public:
  explicit GradContractIntegrand(kernels::GradContractParams p) : p_(p) {}
  void eval(const double* xs, const double* ys, const double* txs,
            const double* tys, double* out, std::size_t n) const override {
    kernels::active_kernels().grad_contract(p_, xs, ys, txs, tys, out, n);
  }

 private:
  kernels::GradContractParams p_;
};

class TangentGradIntegrand final : public quad::BatchIntegrand {
 public:
  explicit TangentGradIntegrand(kernels::TangentGradParams p) : p_(p) {}
  void eval(const double* xs, const double* ys, const double* txs,
            const double* tys, double* out, std::size_t n) const override {
    kernels::active_kernels().grad_contract_tangent(p_, xs, ys, txs, tys, out, n);
  }

 private:
  kernels::TangentGradParams p_;
};

class AreaIntegrand final : public quad::BatchIntegrand {
 public:
  void eval(const double* xs, const double* ys, const double* txs,
            const double* tys, double* out, std::size_t n) const override {
    kernels::active_kernels().area(xs, ys, txs, tys, out, n);
  }
};

void require_off_filament(const FilamentField& f, const LoopPath& path) {
  if (geom::min_distance(path, f.center) <= fields::kSingularityEpsilon) {
    throw SingularPointError("path passes within the singularity radius of the filament at (" +
                             std::to_string(f.center.x) + ", " +
                             std::to_string(f.center.y) + ")");
  }
}

TermResult scaled(const quad::QuadratureResult& q, double prefactor) {
  TermResult t;
  t.value = prefactor * q.value;
  t.error_estimate = std::abs(prefactor) * q.error_estimate;
  t.evaluations = q.evaluations;
  t.converged = q.converged;
  return t;
}

// Raw gradient-contraction integral with p = p0 + vortex part. In tangential
// mode the constant part of p follows the unit tangent with magnitude k0.
quad::QuadratureResult grad_integral(const FilamentField& f, const LoopPath& path,
                                     const ParticleState& particle, Vec2 p0,
                                     double k0_tangential, double vortex_coef,
                                     const QuadratureConfig& cfg) {
  if (particle.k_mode == KMode::tangential) {
    TangentGradIntegrand integrand({geom_of(f), k0_tangential, vortex_coef});
    return quad::integrate_loop(path, integrand, cfg);
  }
  GradContractIntegrand integrand({geom_of(f), p0.x, p0.y, vortex_coef});
  return quad::integrate_loop(path, integrand, cfg);
}

TermResult ncs_term(const FilamentField& f, const LoopPath& path,
                    const ParticleState& particle, double theta, double k_scale,
                    const QuadratureConfig& cfg) {
  double vc = 2.0 * particle.mu_e * particle.s3;
  quad::QuadratureResult q =
      grad_integral(f, path, particle, {particle.k.x * k_scale, particle.k.y * k_scale},
                    particle.k_mag * k_scale, vc, cfg);
  return scaled(q, particle.mu_e * theta * particle.s3);
}

NcpsBreakdown ncps_terms(const FilamentField& f, const LoopPath& path,
                         const ParticleState& particle, const NCParams& params,
                         const QuadratureConfig& cfg) {
  double a2 = params.alpha * params.alpha;
  double inv_gap = 1.0 / a2 - 1.0;  // vanishes exactly at alpha = 1

  NcpsBreakdown b;
  quad::QuadratureResult area_q = quad::integrate_loop(path, AreaIntegrand{}, cfg);
  b.area = scaled(area_q, params.theta_bar / (2.0 * a2));

  double k_scale = 1.0 / params.alpha;
  quad::QuadratureResult vel_q =
      grad_integral(f, path, particle, {particle.k.x * k_scale, particle.k.y * k_scale},
                    particle.k_mag * k_scale, 0.0, cfg);
  b.velocity = scaled(vel_q, inv_gap * particle.mu_e * params.theta * particle.s3);

  double vc = -2.0 * particle.mu_e * particle.s3;  // p = (mu_vec x B)
  quad::QuadratureResult vor_q = grad_integral(f, path, particle, {0.0, 0.0}, 0.0, vc, cfg);
  b.vortex = scaled(vor_q, -inv_gap * particle.mu_e * params.theta * particle.s3);

  b.value = b.area.value + b.velocity.value + b.vortex.value;
  return b;
}

}  // namespace

Vec2 vector_potential_a(const FilamentField& f, Vec2 at, double mu_e) {
  fields::FieldSample s = fields::eval_field(f, at);
  return {-2.0 * mu_e * s.B.y, 2.0 * mu_e * s.B.x};
}

Vec2 nc_vector_potential(const FilamentField& f, Vec2 at,
                         const ParticleState& particle, double theta) {
  if (particle.k_mode != KMode::constant_vector) {
    throw ConfigError("nc_vector_potential requires the constant wave-vector mode");
  }
  fields::FieldSample s = fields::eval_field(f, at);
  Vec2 a = {-2.0 * particle.mu_e * s.B.y, 2.0 * particle.mu_e * s.B.x};
  double vc = 2.0 * particle.mu_e * particle.s3;
  double p1 = particle.k.x + vc * s.B.y;
  double p2 = particle.k.y - vc * s.B.x;
  double d11 = s.grad[0][0], d12 = s.grad[0][1];
  double g1 = p1 * d11 + p2 * d12;
  double g2 = p1 * d12 - p2 * d11;
  return a + particle.mu_e * theta * Vec2{g1, g2};
}

double hmw_phase_line(const FilamentField& f, const LoopPath& path,
                      const ParticleState& particle, const QuadratureConfig& cfg) {
  require_off_filament(f, path);
  TangentialIntegrand integrand(geom_of(f));
  quad::QuadratureResult q = quad::integrate_loop(path, integrand, cfg);
  return 2.0 * particle.mu_e * particle.s3 * q.value;
}

double hmw_phase_flux(const FilamentField& f, const LoopPath& path,
                      const ParticleState& particle) {
  int w = geom::winding_number(path, f.center, fields::kSingularityEpsilon);
  return 2.0 * particle.mu_e * particle.s3 * f.lambda_m * w;
}

double delta_ncs(const FilamentField& f, const LoopPath& path,
                 const ParticleState& particle, double theta,
                 const QuadratureConfig& cfg) {
  require_off_filament(f, path);
  return ncs_term(f, path, particle, theta, 1.0, cfg).value;
}

NcpsBreakdown delta_ncps(const FilamentField& f, const LoopPath& path,
                         const ParticleState& particle, const NCParams& params,
                         const QuadratureConfig& cfg) {
  require_off_filament(f, path);
  return ncps_terms(f, path, particle, params, cfg);
}

PhaseBreakdown total_phase(const FilamentField& f, const LoopPath& path,
                           const ParticleState& particle, const NCParams& params,
                           const QuadratureConfig& cfg) {
  require_off_filament(f, path);
  PhaseBreakdown out;
  out.winding = geom::winding_number(path, f.center, fields::kSingularityEpsilon);
  out.flux_phase = 2.0 * particle.mu_e * particle.s3 * f.lambda_m * out.winding;

  TangentialIntegrand hmw(geom_of(f));
  out.hmw_term = scaled(quad::integrate_loop(path, hmw, cfg),
                        2.0 * particle.mu_e * particle.s3);
  // k/alpha inside the breakdown: see PhaseBreakdown docs
  out.ncs_term = ncs_term(f, path, particle, params.theta, 1.0 / params.alpha, cfg);

  NcpsBreakdown ncps = ncps_terms(f, path, particle, params, cfg);
  out.ncps_area = ncps.area;
  out.ncps_velocity = ncps.velocity;
  out.ncps_vortex = ncps.vortex;

  out.phi_hmw = out.hmw_term.value;
  out.delta_ncs = out.ncs_term.value;
  out.delta_ncps = ncps.value;
  out.total = out.phi_hmw + out.delta_ncs + out.delta_ncps;

  const TermResult* terms[] = {&out.hmw_term, &out.ncs_term, &out.ncps_area,
                               &out.ncps_velocity, &out.ncps_vortex};
  for (const TermResult* t : terms) {
    out.converged = out.converged && t->converged;
    out.error_estimate += t->error_estimate;
    out.evaluations += t->evaluations;
  }
  return out;
}

double principal_value(double phase) {
  double r = std::remainder(phase, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

}  // namespace hmw::phase
