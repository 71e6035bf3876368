#pragma once

#include <array>
#include <cstddef>
#include <functional>

#include "hmw/geometry.hpp"

namespace hmw::quad {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  long max_evaluations = 1'000'000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;  // false: budget ran out with panels above tolerance
};

/// Integrand evaluated at whole batches of path nodes. Positions in (xs, ys),
/// parametric velocities in (txs, tys). Implementations must be pure.
class BatchIntegrand {
 public:
  virtual ~BatchIntegrand() = default;
  virtual void eval(const double* xs, const double* ys, const double* txs,
                    const double* tys, double* out, std::size_t n) const = 0;
};

/// Adapter for plain point-wise integrands f(position, velocity).
class ScalarIntegrand final : public BatchIntegrand {
 public:
  explicit ScalarIntegrand(std::function<double(geom::Vec2, geom::Vec2)> f)
      : f_(std::move(f)) {}
  void eval(const double* xs, const double* ys, const double* txs,
            const double* tys, double* out, std::size_t n) const override {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = f_({xs[i], ys[i]}, {txs[i], tys[i]});
    }
  }

 private:
  std::function<double(geom::Vec2, geom::Vec2)> f_;
};

/// Closed-loop line integral: sum over segments of int_0^1 f(r(t), r'(t)) dt.
///
/// Composite 16-point Gauss-Legendre with adaptive dyadic panel splitting;
/// a panel is accepted once its value agrees with the sum of its halves to
/// within its share of the global tolerance (abs_tol + rel_tol * |value|).
/// Deterministic: panels are refined and summed in parameter order.
QuadratureResult integrate_loop(const geom::LoopPath& path,
                                const BatchIntegrand& f,
                                const QuadratureConfig& cfg = {});

QuadratureResult integrate_loop(const geom::LoopPath& path,
                                const std::function<double(geom::Vec2, geom::Vec2)>& f,
                                const QuadratureConfig& cfg = {});

/// 16-point Gauss-Legendre rule on [-1, 1].
const std::array<double, 16>& gauss_nodes();
const std::array<double, 16>& gauss_weights();

}  // namespace hmw::quad
