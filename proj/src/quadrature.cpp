#include "hmw/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hmw::quad {

namespace {

constexpr int kOrder = 16;
constexpr int kMaxDepth = 30;

struct GaussRule {
  std::array<double, kOrder> node;
  std::array<double, kOrder> weight;
};

// Roots of the Legendre polynomial P_16 by Newton iteration, polished to
// machine precision. Deterministic; avoids a table of transcribed constants.
GaussRule build_rule() {
  GaussRule r{};
  for (int k = 0; k < kOrder / 2; ++k) {
    double x = std::cos(std::numbers::pi * (k + 0.75) / (kOrder + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int n = 2; n <= kOrder; ++n) {
        double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15 && it > 2) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.node[static_cast<std::size_t>(k)] = -x;
    r.node[static_cast<std::size_t>(kOrder - 1 - k)] = x;
    r.weight[static_cast<std::size_t>(k)] = w;
    r.weight[static_cast<std::size_t>(kOrder - 1 - k)] = w;
  }
  return r;
}

const GaussRule& rule() {
  static const GaussRule r = build_rule();
  return r;
}

struct Accumulator {
  const BatchIntegrand* f = nullptr;
  const geom::Segment* seg = nullptr;
  long max_evaluations = 0;
  long evaluations = 0;
  bool converged = true;
  double error_estimate = 0.0;
  double abs_sum = 0.0;
};

double gl16(Accumulator& acc, double a, double b) {
  const GaussRule& r = rule();
  double ts[kOrder], xs[kOrder], ys[kOrder], txs[kOrder], tys[kOrder], fs[kOrder];
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < kOrder; ++i) {
    ts[i] = mid + half * r.node[static_cast<std::size_t>(i)];
  }
  geom::sample(*acc.seg, ts, kOrder, xs, ys, txs, tys);
  acc.f->eval(xs, ys, txs, tys, fs, kOrder);
  acc.evaluations += kOrder;
  double sum = 0.0;
  for (int i = 0; i < kOrder; ++i) {
    sum += r.weight[static_cast<std::size_t>(i)] * fs[i];
  }
  return half * sum;
}

double refine(Accumulator& acc, double a, double b, double whole, double tol,
              int depth) {
  double m = 0.5 * (a + b);
  double left = gl16(acc, a, m);
  double right = gl16(acc, m, b);
  double both = left + right;
  double diff = std::abs(both - whole);
  bool out_of_budget = acc.evaluations + 2 * kOrder > acc.max_evaluations;
  if (diff <= tol || depth >= kMaxDepth || out_of_budget) {
    if (diff > tol) acc.converged = false;
    double scale = std::abs(left) + std::abs(right);
    acc.error_estimate += std::max(diff, std::numeric_limits<double>::epsilon() * scale);
    acc.abs_sum += scale;
    return both;
  }
  return refine(acc, a, m, left, 0.5 * tol, depth + 1) +
         refine(acc, m, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

const std::array<double, 16>& gauss_nodes() { return rule().node; }
const std::array<double, 16>& gauss_weights() { return rule().weight; }

QuadratureResult integrate_loop(const geom::LoopPath& path,
                                const BatchIntegrand& f,
                                const QuadratureConfig& cfg) {
  const auto& segs = path.segments();
  QuadratureResult res;

  // rough pass fixes the tolerance scale
  std::vector<double> rough(segs.size());
  Accumulator acc;
  acc.f = &f;
  acc.max_evaluations = cfg.max_evaluations;
  double rough_total = 0.0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    acc.seg = &segs[i];
    rough[i] = gl16(acc, 0.0, 1.0);
    rough_total += rough[i];
  }
  double tol = cfg.abs_tol + cfg.rel_tol * std::abs(rough_total);
  double seg_tol = tol / static_cast<double>(segs.size());

  double value = 0.0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    acc.seg = &segs[i];
    value += refine(acc, 0.0, 1.0, rough[i], seg_tol, 0);
  }
  res.value = value;
  res.error_estimate =
      acc.error_estimate + std::numeric_limits<double>::epsilon() * acc.abs_sum;
  res.evaluations = acc.evaluations;
  res.converged = acc.converged;
  return res;
}

QuadratureResult integrate_loop(const geom::LoopPath& path,
                                const std::function<double(geom::Vec2, geom::Vec2)>& f,
                                const QuadratureConfig& cfg) {
  return integrate_loop(path, ScalarIntegrand(f), cfg);
}

}  // namespace hmw::quad
