#pragma once

#include "hmw/field.hpp"
#include "hmw/geometry.hpp"
#include "hmw/nc_algebra.hpp"
#include "hmw/quadrature.hpp"

namespace hmw::phase {

using fields::FilamentField;
using geom::LoopPath;
using geom::Vec2;
using nc::NCParams;
using quad::QuadratureConfig;

enum class KMode {
  constant_vector,  // the wave vector k is fixed along the loop (default)
  tangential,       // k = |k| * unit tangent at each point
};

/// Neutral spin-one particle with electric dipole moment mu_e. s3 is the
/// eigenvalue of the spin pseudo-vector along z, so the dipole vector is
/// mu_vec = 2 mu_e s3 z^ and (mu_vec x B) = 2 mu_e s3 (-B2, B1).
struct ParticleState {
  double mu_e = 0.0;
  int s3 = 0;  // -1, 0, +1
  double mass = 1.0;
  Vec2 k{};              // wave number k = mass * velocity (constant mode)
  KMode k_mode = KMode::constant_vector;
  double k_mag = 0.0;    // |k| (tangential mode)
};

/// One phase contribution produced by quadrature, with the prefactor applied
/// to both value and error estimate.
struct TermResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

/// Breakdown of the momentum-momentum correction into its three pieces:
/// area (from the x-x^ part of the shift), velocity-dependent, and the
/// correction to the vortex.
struct NcpsBreakdown {
  double value = 0.0;
  TermResult area;
  TermResult velocity;
  TermResult vortex;
  [[nodiscard]] bool converged() const {
    return area.converged && velocity.converged && vortex.converged;
  }
};

/// Full phase decomposition: total = phi_hmw + delta_ncs + delta_ncps.
///
/// Inside this breakdown delta_ncs is evaluated at the rescaled wave number
/// k/alpha; that is the splitting under which the three pieces sum exactly to
/// the combined phase-space loop integral. (The standalone delta_ncs below
/// uses the particle's own k; the two agree whenever alpha = 1.)
struct PhaseBreakdown {
  double phi_hmw = 0.0;
  double delta_ncs = 0.0;
  double delta_ncps = 0.0;
  double total = 0.0;

  TermResult hmw_term;
  TermResult ncs_term;
  TermResult ncps_area;
  TermResult ncps_velocity;
  TermResult ncps_vortex;

  double flux_phase = 0.0;  // closed form 2 mu_e s3 lambda_m * winding
  int winding = 0;

  bool converged = true;
  double error_estimate = 0.0;  // sum of term estimates
  long evaluations = 0;
};

/// Tangential dipole coupling a_k = 2 mu_e eps^{lk} B_l, i.e.
/// a = 2 mu_e (-B2, B1). A counterclockwise loop enclosing a positive
/// filament then accumulates +2 mu_e s3 lambda_m per turn.
Vec2 vector_potential_a(const FilamentField& f, Vec2 at, double mu_e);

/// a with its first-order noncommutative-space correction:
///   a^_k = 2 mu_e eps^{lk} B_l + mu_e theta eps^{ij} eps^{lk} p_i d_j B_l,
/// p = k - (mu_vec x B). Requires the constant wave-vector mode.
Vec2 nc_vector_potential(const FilamentField& f, Vec2 at,
                         const ParticleState& particle, double theta);

/// s3 * loop integral of a . dr by adaptive quadrature.
double hmw_phase_line(const FilamentField& f, const LoopPath& path,
                      const ParticleState& particle,
                      const QuadratureConfig& cfg = {});

/// Closed form 2 mu_e s3 lambda_m * winding_number. No quadrature.
double hmw_phase_flux(const FilamentField& f, const LoopPath& path,
                      const ParticleState& particle);

/// Space-space correction
///   mu_e s3 theta eps^{ij} eps^{lk} oint [k_i - (mu_vec x B)_i] d_j B_l dx_k.
/// Exactly zero at theta = 0 and exactly linear in theta.
double delta_ncs(const FilamentField& f, const LoopPath& path,
                 const ParticleState& particle, double theta,
                 const QuadratureConfig& cfg = {});

/// Momentum-momentum correction; zero identically at alpha = 1.
NcpsBreakdown delta_ncps(const FilamentField& f, const LoopPath& path,
                         const ParticleState& particle, const NCParams& params,
                         const QuadratureConfig& cfg = {});

PhaseBreakdown total_phase(const FilamentField& f, const LoopPath& path,
                           const ParticleState& particle, const NCParams& params,
                           const QuadratureConfig& cfg = {});

/// Phases are reported unreduced (winding information intact); this folds a
/// phase into (-pi, pi] for fringe comparison.
double principal_value(double phase);

}  // namespace hmw::phase
