#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/optimize.hpp"

// Shared randomized-instance builders.  All values live on the dyadic grid
// (multiples of 1/8, well inside the exactly representable range), positive
// weights are small integers, and weight sums are powers of two, so sums,
// differences and the division in the lower bound introduce no rounding.
// Exactness claims in the tests rely on this.
namespace support {

using maxplus::eps;
using maxplus::ExtScalar;
using maxplus::Matrix;
using maxplus::OptProblem;
using maxplus::Vec;

using Rng = std::mt19937_64;

inline double dyadic(Rng& rng, double lo = -10.0, double hi = 10.0) {
  std::uniform_int_distribution<long> d(static_cast<long>(lo * 8),
                                        static_cast<long>(hi * 8));
  return static_cast<double>(d(rng)) / 8.0;
}

inline bool chance(Rng& rng, double prob) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < prob;
}

inline ExtScalar dyadic_or_eps(Rng& rng, double eps_prob) {
  return chance(rng, eps_prob) ? ExtScalar{eps} : ExtScalar{dyadic(rng)};
}

inline Matrix random_matrix(Rng& rng, std::size_t m, std::size_t n,
                            double eps_prob = 0.0) {
  Matrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dyadic_or_eps(rng, eps_prob);
  return a;
}

inline Vec random_vec(Rng& rng, std::size_t n, double eps_prob = 0.0) {
  Vec v(n, ExtScalar{eps});
  for (std::size_t j = 0; j < n; ++j) v[j] = dyadic_or_eps(rng, eps_prob);
  return v;
}

/// Integer weights with `zeros` zero slots (positions randomized) whose
/// positive part sums to a power of two.
inline std::vector<double> random_weights(Rng& rng, std::size_t n,
                                          std::size_t zeros) {
  std::size_t positive = n - zeros;
  std::size_t target = 1;
  while (target < positive) target *= 2;
  std::vector<double> k(n, 0.0);
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < n; ++j) order[j] = j;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t t = 0; t < positive; ++t) k[order[t]] = 1.0;
  std::uniform_int_distribution<std::size_t> pick(0, positive - 1);
  for (std::size_t extra = target - positive; extra > 0; --extra)
    k[order[pick(rng)]] += 1.0;
  return k;
}

/// A problem that is solvable for every c: on the positive-weight columns
/// the matrix is max-plus rank one, a_ij = u_i + d_j, which pins
/// sum_J k_j x*_j to c exactly.  Zero-weight columns get at least one finite
/// entry so no variable is eliminated.  c is then back-solved from a first
/// solve pass, c := sum_J k_j x*_j, which the structure keeps a fixed point.
inline OptProblem random_solvable(Rng& rng, std::size_t m, std::size_t n,
                                  std::size_t zero_weights) {
  std::vector<double> k = random_weights(rng, n, zero_weights);
  Matrix a(m, n);
  std::vector<double> u(m), d(n);
  for (std::size_t i = 0; i < m; ++i) u[i] = dyadic(rng, -5.0, 5.0);
  for (std::size_t j = 0; j < n; ++j) d[j] = dyadic(rng, -5.0, 5.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (k[j] > 0.0) {
      for (std::size_t i = 0; i < m; ++i) a(i, j) = ExtScalar{u[i] + d[j]};
    } else {
      bool has_finite = false;
      for (std::size_t i = 0; i < m; ++i) {
        a(i, j) = dyadic_or_eps(rng, 0.3);
        if (!a(i, j).is_neg_inf()) has_finite = true;
      }
      if (!has_finite) a(0, j) = ExtScalar{dyadic(rng)};
    }
  }
  OptProblem first(a, k, dyadic(rng, -4.0, 4.0));
  maxplus::SolveReport pass = maxplus::solve(first);
  double c = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    if (k[j] > 0.0) c += k[j] * pass.greatest_subsolution[j].value();
  return OptProblem(std::move(a), std::move(k), c);
}

/// A general problem for dominance/agreement suites: ε entries and zero
/// weights allowed, with at least one finite entry per row kept so the
/// reduced problem is never empty.
inline OptProblem random_problem(Rng& rng, std::size_t m, std::size_t n,
                                 double eps_prob) {
  Matrix a = random_matrix(rng, m, n, eps_prob);
  for (std::size_t i = 0; i < m; ++i)
    if (a.row_is_eps(i)) a(i, rng() % n) = ExtScalar{dyadic(rng)};
  std::size_t zeros = n > 1 ? rng() % n : 0;
  std::vector<double> k = random_weights(rng, n, zeros);
  return OptProblem(std::move(a), std::move(k), dyadic(rng, -4.0, 4.0));
}

}  // namespace support
