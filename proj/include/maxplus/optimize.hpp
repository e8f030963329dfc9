#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Default tolerance for the solvability criterion |sum_j k_j x*_j - c|.
inline constexpr double default_tol = 1e-9;

/// Global optimization problem: minimize F(x) = A ⊗ x componentwise over the
/// hyperplane X = { x in R^n : sum_j k_j x_j = c } with k_j >= 0, not all 0.
struct OptProblem {
  Matrix A;               // m x n, entries in R_max (finite or ε)
  std::vector<double> k;  // n nonnegative weights, at least one positive
  double c;

  OptProblem(Matrix A_, std::vector<double> k_, double c_);

  std::size_t num_rows() const noexcept { return A.rows(); }
  std::size_t num_vars() const noexcept { return A.cols(); }
};

/// Reduction that removes rows that are identically ε and eliminates
/// variables whose column is all ε and whose weight is zero.  Indices are
/// 0-based positions in the original problem.
struct PreprocessReport {
  std::vector<std::size_t> dropped_rows;
  std::vector<std::size_t> eliminated_vars;
  std::vector<std::size_t> kept_rows;
  std::vector<std::size_t> kept_vars;
  OptProblem reduced;
};

PreprocessReport preprocess(const OptProblem& p);

/// Greatest lower bound of F over X, componentwise:
/// b_i = (sum_{j in J} k_j a_ij + c) / sum_{j in J} k_j with J = {j : k_j > 0},
/// and b_i = ε as soon as a_ij = ε for some j in J.
Vec greatest_lower_bound(const OptProblem& p);

/// Same bound evaluated without restricting to J: zero-weight terms enter as
/// 0 * a_ij = 0 and the divisor is sum over all j.  Agrees exactly with
/// greatest_lower_bound; kept as an independent route for cross-checking.
Vec greatest_lower_bound_all_terms(const OptProblem& p);

/// Solvability criterion: true iff b and x* are finite throughout and
/// |sum_{j} k_j x*_j - c| <= tol.  The sum runs over positive weights.
bool check_criterion(const OptProblem& p, const Vec& x_star, const Vec& b,
                     double tol = default_tol);

/// One variable's place in the optimal set.
enum class Constraint { EqualTo, AtMost, Free };

struct VarConstraint {
  Constraint kind;
  ExtScalar bound;  // unused when kind == Free
};

/// The full set of minimizers, one constraint per original variable:
/// x_j = x*_j where k_j > 0, x_j <= x*_j where k_j = 0, free if eliminated.
struct SolutionSet {
  std::vector<VarConstraint> vars;
};

struct SolveReport {
  PreprocessReport preprocess;
  Vec lower_bound;           // b, one entry per kept row
  Vec greatest_subsolution;  // x*, one entry per kept variable
  std::optional<double> criterion_sum;  // sum_j k_j x*_j when defined
  double tol;
  bool solvable;
  bool unique;
  std::optional<SolutionSet> solutions;  // present iff solvable
  std::optional<Vec> alternative;        // second optimum when not unique
};

/// Full pipeline: preprocess, bound, residuate, test the criterion, and
/// describe the optimal set.  The minimizer is unique iff every reduced
/// weight is positive and no variable was eliminated.
SolveReport solve(const OptProblem& p, double tol = default_tol);

/// A second optimum of a solvable reduced problem: copy x* and drop
/// component j0 to ε.  Requires k_{j0} == 0; throws DomainError otherwise.
Vec construct_alternative(const OptProblem& p, const Vec& x_star,
                          std::size_t j0);

struct Evaluation {
  Vec objective;           // F(x) = A ⊗ x
  double constraint_value; // sum_j k_j x_j
};

/// Evaluate objective and constraint at a finite point.
Evaluation evaluate(const OptProblem& p, const std::vector<double>& x);

}  // namespace maxplus
