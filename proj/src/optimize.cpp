#include "maxplus/optimize.hpp"

#include <cassert>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "maxplus/errors.hpp"
#include "maxplus/residuation.hpp"

namespace maxplus {

OptProblem::OptProblem(Matrix A_, std::vector<double> k_, double c_)
    : A(std::move(A_)), k(std::move(k_)), c(c_) {
  if (A.cols() != k.size())
    throw DimensionMismatch("problem: matrix has " + std::to_string(A.cols()) +
                            " columns but k has " + std::to_string(k.size()) +
                            " entries");
  if (A.has_pos_inf())
    throw DomainError("problem: matrix entries must be in R_max (finite or -inf)");
  bool any_positive = false;
  for (double kj : k) {
    if (!std::isfinite(kj) || kj < 0.0)
      throw DomainError("problem: k coefficients must be finite and >= 0");
    if (kj > 0.0) any_positive = true;
  }
  if (!any_positive) throw DomainError("problem: k must not be all zero");
  if (!std::isfinite(c))
    throw DomainError("problem: c must be finite");
}

PreprocessReport preprocess(const OptProblem& p) {
  std::vector<std::size_t> dropped_rows, eliminated_vars, kept_rows, kept_vars;
  for (std::size_t i = 0; i < p.num_rows(); ++i)
    (p.A.row_is_eps(i) ? dropped_rows : kept_rows).push_back(i);
  if (kept_rows.empty())
    throw EmptyObjective("objective is identically -inf: every row of the matrix is -inf");
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    if (p.k[j] == 0.0 && p.A.col_is_eps(j))
      eliminated_vars.push_back(j);
    else
      kept_vars.push_back(j);
  }
  Matrix reduced_A(kept_rows.size(), kept_vars.size());
  std::vector<double> reduced_k(kept_vars.size());
  for (std::size_t i = 0; i < kept_rows.size(); ++i)
    for (std::size_t j = 0; j < kept_vars.size(); ++j)
      reduced_A(i, j) = p.A(kept_rows[i], kept_vars[j]);
  for (std::size_t j = 0; j < kept_vars.size(); ++j)
    reduced_k[j] = p.k[kept_vars[j]];
  return PreprocessReport{std::move(dropped_rows), std::move(eliminated_vars),
                          std::move(kept_rows), std::move(kept_vars),
                          OptProblem(std::move(reduced_A), std::move(reduced_k),
                                     p.c)};
}

Vec greatest_lower_bound(const OptProblem& p) {
  double weight_sum = 0.0;
  for (double kj : p.k)
    if (kj > 0.0) weight_sum += kj;
  Vec b(p.num_rows(), ExtScalar{eps});
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    double num = 0.0;
    bool hit_eps = false;
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      if (p.k[j] <= 0.0) continue;
      ExtScalar a = p.A(i, j);
      if (a.is_neg_inf()) {
        hit_eps = true;
        break;
      }
      num += p.k[j] * a.value();
    }
    b[i] = hit_eps ? ExtScalar{eps} : ext_div(ExtScalar{num + p.c}, weight_sum);
  }
#ifndef NDEBUG
  assert(b == greatest_lower_bound_all_terms(p));
#endif
  return b;
}

Vec greatest_lower_bound_all_terms(const OptProblem& p) {
  double weight_sum = 0.0;
  for (double kj : p.k) weight_sum += kj;
  Vec b(p.num_rows(), ExtScalar{eps});
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    ExtScalar acc{0.0};
    for (std::size_t j = 0; j < p.num_vars(); ++j)
      acc = otimes(acc, ext_scale(p.k[j], p.A(i, j)));
    acc = otimes(acc, ExtScalar{p.c});
    b[i] = ext_div(acc, weight_sum);
  }
  return b;
}

bool check_criterion(const OptProblem& p, const Vec& x_star, const Vec& b,
                     double tol) {
  if (x_star.size() != p.num_vars() || b.size() != p.num_rows())
    throw DimensionMismatch("criterion: vector lengths do not match the problem");
  for (ExtScalar v : b)
    if (!v.is_finite()) return false;
  for (ExtScalar v : x_star)
    if (!v.is_finite()) return false;
  double sum = 0.0;
  for (std::size_t j = 0; j < p.num_vars(); ++j)
    if (p.k[j] > 0.0) sum += p.k[j] * x_star[j].value();
  return std::abs(sum - p.c) <= tol;
}

Vec construct_alternative(const OptProblem& p, const Vec& x_star,
                          std::size_t j0) {
  if (x_star.size() != p.num_vars())
    throw DimensionMismatch("alternative: x* length does not match the problem");
  if (j0 >= p.num_vars())
    throw DomainError("alternative: variable index out of range");
  if (p.k[j0] != 0.0)
    throw DomainError("alternative: variable " + std::to_string(j0) +
                      " has positive weight and is pinned at x*");
  Vec other = x_star;
  other[j0] = ExtScalar{eps};
  return other;
}

Evaluation evaluate(const OptProblem& p, const std::vector<double>& x) {
  if (x.size() != p.num_vars())
    throw DimensionMismatch("evaluate: point length does not match the problem");
  Vec xv(x.size(), ExtScalar{eps});
  double constraint = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!std::isfinite(x[j]))
      throw DomainError("evaluate: point coordinates must be finite");
    xv[j] = ExtScalar{x[j]};
    constraint += p.k[j] * x[j];
  }
  return Evaluation{otimes(p.A, xv), constraint};
}

SolveReport solve(const OptProblem& p, double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol))
    throw DomainError("solve: tolerance must be a finite nonnegative real");
  PreprocessReport pre = preprocess(p);
  const OptProblem& rp = pre.reduced;

  Vec b = greatest_lower_bound(rp);
  Vec x_star = maxplus::greatest_subsolution(LinearSystem{rp.A, b});
  bool solvable = check_criterion(rp, x_star, b, tol);

  std::optional<double> criterion_sum;
  bool xs_finite = true;
  for (ExtScalar v : x_star)
    if (!v.is_finite()) xs_finite = false;
  if (xs_finite) {
    double sum = 0.0;
    for (std::size_t j = 0; j < rp.num_vars(); ++j)
      if (rp.k[j] > 0.0) sum += rp.k[j] * x_star[j].value();
    criterion_sum = sum;
  }

  bool all_positive = true;
  for (double kj : rp.k)
    if (kj == 0.0) all_positive = false;
  bool unique = solvable && all_positive && pre.eliminated_vars.empty();

  std::optional<SolutionSet> solutions;
  std::optional<Vec> alternative;
  if (solvable) {
    SolutionSet set;
    set.vars.resize(p.num_vars());
    for (std::size_t j : pre.eliminated_vars)
      set.vars[j] = VarConstraint{Constraint::Free, ExtScalar{eps}};
    for (std::size_t r = 0; r < pre.kept_vars.size(); ++r) {
      Constraint kind =
          rp.k[r] > 0.0 ? Constraint::EqualTo : Constraint::AtMost;
      set.vars[pre.kept_vars[r]] = VarConstraint{kind, x_star[r]};
    }
    if (!unique) {
      // Exhibit a second optimum: start from x* (free slots at 0) and send
      // the first non-pinned coordinate to ε.
      Vec other(p.num_vars(), ExtScalar{0.0});
      for (std::size_t j = 0; j < p.num_vars(); ++j)
        if (set.vars[j].kind != Constraint::Free)
          other[j] = set.vars[j].bound;
      for (std::size_t j = 0; j < p.num_vars(); ++j) {
        if (set.vars[j].kind != Constraint::EqualTo) {
          other[j] = ExtScalar{eps};
          break;
        }
      }
      alternative = std::move(other);
    }
    solutions = std::move(set);
  }

  return SolveReport{std::move(pre),
                     std::move(b),
                     std::move(x_star),
                     criterion_sum,
                     tol,
                     solvable,
                     unique,
                     std::move(solutions),
                     std::move(alternative)};
}

}  // namespace maxplus
