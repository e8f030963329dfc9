#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxplus/optimize.hpp"

namespace maxplus {

/// Sampling plan for the brute-force checks.
struct SampleConfig {
  double box_radius = 5.0;           // half-width of the box around the center
  std::size_t grid_points_per_axis = 7;
  std::uint64_t seed = 0;
  std::size_t random_points = 10000;
  double tol = default_tol;
};

/// Deterministic points on the constraint hyperplane sum_j k_j x_j = c inside
/// a box around `center`: a regular grid over the free coordinates when small
/// enough, plus seeded uniform draws.  The coordinate with the largest weight
/// (lowest index on ties) is solved for, so every point satisfies the
/// constraint up to roundoff.  A one-variable problem has the single point
/// c / k_1.
std::vector<std::vector<double>> sample_constraint_points(
    const OptProblem& p, const std::vector<double>& center,
    const SampleConfig& cfg);

struct OracleVerdict {
  bool consistent = true;
  std::size_t samples_checked = 0;
  std::string detail;
  std::optional<std::vector<double>> counterexample;
};

/// Check b <= F(x) at every sample, allowing `tol` slack per component (0 by
/// default, i.e. exact); any violation is reported with the offending point.
OracleVerdict verify_lower_bound(const OptProblem& p, const Vec& b,
                                 const std::vector<std::vector<double>>& samples,
                                 double tol = 0.0);

/// Cross-examine a solve report against brute force.  All comparisons allow
/// cfg.tol slack so that instances whose bound is not exactly representable
/// are not flagged for harmless roundoff.  For a solvable report: F(x*) must
/// attain b, x* must satisfy the constraint, and no sample may lie strictly
/// below b.  For an unsolvable report: a ε component of b certifies
/// unattainability outright; otherwise no sample may attain b on every
/// component.
OracleVerdict verify_optimality(const OptProblem& p, const SolveReport& report,
                                const SampleConfig& cfg);

}  // namespace maxplus
