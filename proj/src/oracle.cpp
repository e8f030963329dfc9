#include "maxplus/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <random>
#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

std::size_t pivot_index(const std::vector<double>& k) {
  std::size_t pivot = 0;
  for (std::size_t j = 1; j < k.size(); ++j)
    if (k[j] > k[pivot]) pivot = j;
  if (k[pivot] <= 0.0)
    throw DomainError("sampling: k must have a positive coefficient");
  return pivot;
}

// Strict componentwise domination with slack: y <= z + tol everywhere and
// y < z - tol somewhere.  Values are in R_max (no +inf).
bool strictly_below(const Vec& y, const Vec& z, double tol) {
  bool below = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].is_neg_inf()) {
      if (!z[i].is_neg_inf()) below = true;
      continue;
    }
    if (z[i].is_neg_inf()) return false;
    if (y[i].value() > z[i].value() + tol) return false;
    if (y[i].value() < z[i].value() - tol) below = true;
  }
  return below;
}

// |y_i - z_i| <= tol componentwise; infinite components must match exactly.
bool attains(const Vec& y, const Vec& z, double tol) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!y[i].is_finite() || !z[i].is_finite()) {
      if (!(y[i] == z[i])) return false;
      continue;
    }
    if (!(std::abs(y[i].value() - z[i].value()) <= tol)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<double>> sample_constraint_points(
    const OptProblem& p, const std::vector<double>& center,
    const SampleConfig& cfg) {
  const std::size_t n = p.num_vars();
  if (center.size() != n)
    throw DimensionMismatch("sampling: center length does not match the problem");
  for (double v : center)
    if (!std::isfinite(v))
      throw DomainError("sampling: center coordinates must be finite");
  if (!(cfg.box_radius > 0.0) || !std::isfinite(cfg.box_radius))
    throw DomainError("sampling: box_radius must be positive");
  if (cfg.grid_points_per_axis < 2)
    throw DomainError("sampling: grid_points_per_axis must be at least 2");

  const std::size_t pivot = pivot_index(p.k);
  auto solve_for_pivot = [&](std::vector<double>& x) {
    double rest = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != pivot) rest += p.k[j] * x[j];
    x[pivot] = (p.c - rest) / p.k[pivot];
  };

  std::vector<std::vector<double>> points;
  if (n == 1) {
    // The hyperplane is the single point c / k_1.
    std::vector<double> x(1, 0.0);
    solve_for_pivot(x);
    points.push_back(std::move(x));
    return points;
  }

  const std::size_t g = cfg.grid_points_per_axis;
  const std::size_t free_axes = n - 1;
  // Walk the full grid only while it stays small.
  double grid_size = 1.0;
  bool grid_feasible = true;
  for (std::size_t a = 0; a < free_axes && grid_feasible; ++a) {
    grid_size *= static_cast<double>(g);
    if (grid_size > 2e5) grid_feasible = false;
  }
  if (grid_feasible) {
    std::vector<std::size_t> idx(free_axes, 0);
    const double step = 2.0 * cfg.box_radius / static_cast<double>(g - 1);
    while (true) {
      std::vector<double> x = center;
      std::size_t a = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot) continue;
        x[j] = center[j] - cfg.box_radius + static_cast<double>(idx[a]) * step;
        ++a;
      }
      solve_for_pivot(x);
      points.push_back(std::move(x));
      std::size_t carry = 0;
      while (carry < free_axes && ++idx[carry] == g) {
        idx[carry] = 0;
        ++carry;
      }
      if (carry == free_axes) break;
    }
  }

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> offset(-cfg.box_radius,
                                                cfg.box_radius);
  for (std::size_t s = 0; s < cfg.random_points; ++s) {
    std::vector<double> x = center;
    for (std::size_t j = 0; j < n; ++j)
      if (j != pivot) x[j] = center[j] + offset(rng);
    solve_for_pivot(x);
    points.push_back(std::move(x));
  }
  return points;
}

OracleVerdict verify_lower_bound(const OptProblem& p, const Vec& b,
                                 const std::vector<std::vector<double>>& samples,
                                 double tol) {
  if (b.size() != p.num_rows())
    throw DimensionMismatch("oracle: bound length does not match the problem");
  OracleVerdict verdict;
  for (const auto& x : samples) {
    ++verdict.samples_checked;
    Evaluation ev = evaluate(p, x);
    bool holds = true;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i].is_neg_inf()) continue;
      if (ev.objective[i].is_neg_inf() ||
          ev.objective[i].value() < b[i].value() - tol) {
        holds = false;
        break;
      }
    }
    if (!holds) {
      verdict.consistent = false;
      verdict.detail = "sampled point falls below the reported lower bound";
      verdict.counterexample = x;
      return verdict;
    }
  }
  verdict.detail = "bound holds at every sampled point";
  return verdict;
}

OracleVerdict verify_optimality(const OptProblem& p, const SolveReport& report,
                                const SampleConfig& cfg) {
  const PreprocessReport& pre = report.preprocess;
  if (pre.kept_rows.size() + pre.dropped_rows.size() != p.num_rows() ||
      pre.kept_vars.size() + pre.eliminated_vars.size() != p.num_vars())
    throw DimensionMismatch("oracle: report does not correspond to the problem");
  const OptProblem& rp = pre.reduced;
  const Vec& b = report.lower_bound;
  OracleVerdict verdict;

  if (report.solvable) {
    // x* must attain the bound exactly and sit on the constraint.
    std::vector<double> xs(rp.num_vars());
    for (std::size_t j = 0; j < rp.num_vars(); ++j) {
      if (!report.greatest_subsolution[j].is_finite()) {
        verdict.consistent = false;
        verdict.detail = "reported solvable but x* has an infinite component";
        return verdict;
      }
      xs[j] = report.greatest_subsolution[j].value();
    }
    Evaluation at_xs = evaluate(rp, xs);
    if (!attains(at_xs.objective, b, cfg.tol)) {
      verdict.consistent = false;
      verdict.detail = "x* does not attain the reported lower bound";
      return verdict;
    }
    if (std::abs(at_xs.constraint_value - rp.c) > cfg.tol) {
      verdict.consistent = false;
      verdict.detail = "x* does not satisfy the constraint within tolerance";
      return verdict;
    }
    auto samples = sample_constraint_points(rp, xs, cfg);
    OracleVerdict bound_check = verify_lower_bound(rp, b, samples, cfg.tol);
    if (!bound_check.consistent) return bound_check;
    verdict.samples_checked = bound_check.samples_checked;
    for (const auto& x : samples) {
      Evaluation ev = evaluate(rp, x);
      if (strictly_below(ev.objective, b, cfg.tol)) {
        verdict.consistent = false;
        verdict.detail = "sampled point strictly dominates the reported optimum";
        verdict.counterexample = x;
        return verdict;
      }
    }
    verdict.detail = "optimum confirmed against " +
                     std::to_string(verdict.samples_checked) +
                     " constraint samples";
    return verdict;
  }

  // Unsolvable: a -inf component of the bound is unattainable by any finite
  // point, which settles the verdict structurally.
  bool b_has_eps = false;
  for (ExtScalar v : b)
    if (v.is_neg_inf()) b_has_eps = true;

  std::vector<double> center(rp.num_vars(), 0.0);
  if (b_has_eps) {
    // Sample around a basic feasible point instead of the (infinite) x*.
    const std::size_t pivot = pivot_index(rp.k);
    center[pivot] = rp.c / rp.k[pivot];
  } else {
    for (std::size_t j = 0; j < rp.num_vars(); ++j) {
      if (!report.greatest_subsolution[j].is_finite()) {
        verdict.consistent = false;
        verdict.detail =
            "finite bound but x* has an infinite component; report is inconsistent";
        return verdict;
      }
      center[j] = report.greatest_subsolution[j].value();
    }
  }

  auto samples = sample_constraint_points(rp, center, cfg);
  OracleVerdict bound_check = verify_lower_bound(rp, b, samples, cfg.tol);
  if (!bound_check.consistent) return bound_check;
  verdict.samples_checked = bound_check.samples_checked;

  if (!b_has_eps) {
    for (const auto& x : samples) {
      Evaluation ev = evaluate(rp, x);
      if (attains(ev.objective, b, cfg.tol)) {
        verdict.consistent = false;
        verdict.detail = "sampled point attains the bound, but the problem was reported unsolvable";
        verdict.counterexample = x;
        return verdict;
      }
    }
    verdict.detail = "no sampled point attains the bound (" +
                     std::to_string(verdict.samples_checked) + " checked)";
  } else {
    verdict.detail = "bound has a -inf component, which no finite point attains";
  }
  return verdict;
}

}  // namespace maxplus
