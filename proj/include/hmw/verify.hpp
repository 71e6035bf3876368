#pragma once

#include <string>
#include <vector>

#include "hmw/kemmer.hpp"

namespace hmw::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass
};

struct Report {
  std::vector<CheckResult> checks;
  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] int failures() const;
};

/// Exact-algebra suite: all 64 Kemmer residuals, spin-tensor antisymmetry,
/// the xi_3 identities and spectrum, entry arithmetic (Gaussian integers /
/// half-integers), and the deformed-commutator constraint on a 20-point grid
/// of rational parameters. Pure and deterministic.
Report run_algebra_suite(const kemmer::BetaSet& set);
Report run_algebra_suite();

/// One line per check ("PASS name" / "FAIL name: detail") plus a summary.
/// Byte-stable across runs.
std::string format_report(const Report& r);

}  // namespace hmw::verify
