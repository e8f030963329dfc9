#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "maxplus/errors.hpp"
#include "maxplus/oracle.hpp"
#include "maxplus/optimize.hpp"
#include "support.hpp"

using namespace maxplus;

namespace {

OptProblem running_problem(std::vector<double> k = {2.0, 1.0, 0.0}) {
  Matrix a{{1.0, 2.0, -2.0}, {-1.0, 0.0, eps}, {0.0, 1.0, 3.0}};
  return OptProblem(a, std::move(k), 2.0);
}

double constraint_at(const OptProblem& p, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) s += p.k[j] * x[j];
  return s;
}

}  // namespace

TEST_CASE("sample config validation") {
  OptProblem p = running_problem();
  SampleConfig cfg;
  cfg.box_radius = 0.0;
  CHECK_THROWS_AS(sample_constraint_points(p, {1.0, 0.0, 0.0}, cfg), DomainError);
  cfg.box_radius = 5.0;
  cfg.grid_points_per_axis = 1;
  CHECK_THROWS_AS(sample_constraint_points(p, {1.0, 0.0, 0.0}, cfg), DomainError);
  CHECK_THROWS_AS(sample_constraint_points(p, {1.0}, SampleConfig{}),
                  DimensionMismatch);
}

TEST_CASE("samples satisfy the constraint") {
  SUBCASE("running instance around a feasible center") {
    SampleConfig cfg;
    cfg.box_radius = 2.0;
    cfg.grid_points_per_axis = 5;
    cfg.random_points = 1000;
    OptProblem p = running_problem();
    auto points = sample_constraint_points(p, {1.0, 0.0, 0.0}, cfg);
    CHECK(points.size() == 25 + 1000);  // 5x5 grid over the two free axes
    for (const auto& x : points)
      CHECK(std::abs(constraint_at(p, x) - p.c) <= 1e-9);
  }
  SUBCASE("one variable pins the single point") {
    OptProblem p(Matrix{{0.0}}, {2.0}, 5.0);
    auto points = sample_constraint_points(p, {2.5}, SampleConfig{});
    REQUIRE(points.size() == 1);
    CHECK(points[0][0] == 2.5);
  }
  SUBCASE("randomized problems stay on the hyperplane") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
      OptProblem p = support::random_problem(rng, 2, 3, 0.2);
      std::vector<double> center(3, 0.0);
      SampleConfig cfg;
      cfg.seed = rng();
      cfg.random_points = 200;
      for (const auto& x : sample_constraint_points(p, center, cfg))
        CHECK(std::abs(constraint_at(p, x) - p.c) <= 1e-9);
    }
  }
  SUBCASE("identical seeds reproduce identical samples") {
    OptProblem p = running_problem();
    SampleConfig cfg;
    cfg.seed = 99;
    cfg.random_points = 500;
    auto a = sample_constraint_points(p, {1.0, 0.0, 0.0}, cfg);
    auto b = sample_constraint_points(p, {1.0, 0.0, 0.0}, cfg);
    CHECK(a == b);
    cfg.seed = 100;
    CHECK(a != sample_constraint_points(p, {1.0, 0.0, 0.0}, cfg));
  }
}

TEST_CASE("verify_lower_bound") {
  OptProblem p = running_problem();
  PreprocessReport pre = preprocess(p);
  Vec b = greatest_lower_bound(pre.reduced);
  SampleConfig cfg;
  cfg.seed = 7;
  auto samples = sample_constraint_points(pre.reduced, {1.0, 0.0, 0.0}, cfg);

  SUBCASE("the computed bound holds everywhere") {
    OracleVerdict v = verify_lower_bound(pre.reduced, b, samples);
    CHECK(v.consistent);
    CHECK(v.samples_checked == samples.size());
  }
  SUBCASE("an inflated bound is falsified with a counterexample") {
    Vec inflated = b;
    inflated[0] = otimes(inflated[0], ExtScalar{0.1});
    OracleVerdict v = verify_lower_bound(pre.reduced, inflated, samples);
    CHECK_FALSE(v.consistent);
    REQUIRE(v.counterexample.has_value());
    Evaluation ev = evaluate(pre.reduced, *v.counterexample);
    CHECK_FALSE(leq(inflated, ev.objective));
  }
  SUBCASE("single-row mean bound") {
    OptProblem q(Matrix{{0.0, 0.0}}, {1.0, 1.0}, 0.0);
    Vec qb = greatest_lower_bound(q);
    CHECK(qb == Vec{ExtScalar{0.0}});
    auto qs = sample_constraint_points(q, {0.0, 0.0}, cfg);
    CHECK(verify_lower_bound(q, qb, qs).consistent);
  }
}

TEST_CASE("verify_optimality") {
  SampleConfig cfg;
  cfg.seed = 42;

  SUBCASE("solvable running instance is consistent") {
    OptProblem p = running_problem();
    SolveReport r = solve(p);
    OracleVerdict v = verify_optimality(p, r, cfg);
    CHECK(v.consistent);
    CHECK(v.samples_checked > 0);
  }
  SUBCASE("unsolvable variant is certified by the eps component") {
    OptProblem p = running_problem({2.0, 1.0, 1.0});
    SolveReport r = solve(p);
    REQUIRE_FALSE(r.solvable);
    OracleVerdict v = verify_optimality(p, r, cfg);
    CHECK(v.consistent);
    CHECK(v.detail.find("-inf") != std::string::npos);
  }
  SUBCASE("tampered bound is flagged") {
    OptProblem p = running_problem();
    SolveReport r = solve(p);
    r.lower_bound[0] = otimes(r.lower_bound[0], ExtScalar{0.1});
    OracleVerdict v = verify_optimality(p, r, cfg);
    CHECK_FALSE(v.consistent);
  }
  SUBCASE("tampered subsolution is flagged") {
    OptProblem p = running_problem();
    SolveReport r = solve(p);
    r.greatest_subsolution[0] = otimes(r.greatest_subsolution[0], ExtScalar{-0.5});
    OracleVerdict v = verify_optimality(p, r, cfg);
    CHECK_FALSE(v.consistent);
  }
  SUBCASE("false solvable verdict under a loose tolerance is flagged") {
    // Gap of 1.5e-9 against c: a loose solve tolerance declares this
    // solvable, and the sampling oracle catches the lie at the default
    // tolerance because a grid point attains the bound.
    OptProblem p(Matrix{{0.0, 0.0}, {2e-9, 0.0}}, {3.0, 1.0}, 0.0);
    SolveReport loose = solve(p, 1e-8);
    CHECK(loose.solvable);
    SolveReport strict = solve(p);
    CHECK_FALSE(strict.solvable);
    OracleVerdict v = verify_optimality(p, strict, cfg);
    CHECK_FALSE(v.consistent);
    REQUIRE(v.counterexample.has_value());
  }
  SUBCASE("report for a different problem is rejected") {
    OptProblem p = running_problem();
    SolveReport r = solve(p);
    OptProblem q(Matrix{{0.0}}, {1.0}, 0.0);
    CHECK_THROWS_AS(verify_optimality(q, r, cfg), DimensionMismatch);
  }
}

TEST_CASE("oracle and solver agree on random instances") {
  std::mt19937_64 rng(33);
  SampleConfig cfg;
  cfg.random_points = 2000;
  int solvable_seen = 0, unsolvable_seen = 0;
  for (int t = 0; t < 200; ++t) {
    cfg.seed = rng();
    std::size_t n = 2 + rng() % 3;
    bool make_solvable = support::chance(rng, 0.5);
    OptProblem p = make_solvable
                       ? support::random_solvable(rng, 2 + rng() % 3, n, rng() % n)
                       : support::random_problem(rng, 2 + rng() % 3, n, 0.25);
    SolveReport r = solve(p);
    (r.solvable ? solvable_seen : unsolvable_seen)++;
    CHECK(verify_optimality(p, r, cfg).consistent);
  }
  // The generator mix must actually exercise both verdicts.
  CHECK(solvable_seen >= 50);
  CHECK(unsolvable_seen >= 50);
}
