#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "maxplus/errors.hpp"
#include "maxplus/oracle.hpp"
#include "maxplus/optimize.hpp"
#include "maxplus/problem_io.hpp"

namespace {

constexpr int kExitSolvable = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitInputError = 2;
constexpr int kExitVerifyFailed = 3;

int run_solve(const std::string& path, double tol, bool json, bool verify,
              std::uint64_t seed, double radius, std::size_t samples) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitInputError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  maxplus::SolveReport report = [&] {
    auto problem = maxplus::parse_problem(buf.str());
    return maxplus::solve(problem, tol);
  }();

  std::optional<maxplus::OracleVerdict> verdict;
  if (verify) {
    maxplus::SampleConfig cfg;
    cfg.seed = seed;
    cfg.box_radius = radius;
    cfg.random_points = samples;
    cfg.tol = tol;
    auto problem = maxplus::parse_problem(buf.str());
    verdict = maxplus::verify_optimality(problem, report, cfg);
  }

  std::cout << (json ? maxplus::render_report_json(report, verdict)
                     : maxplus::render_report_text(report, verdict));
  if (verdict && !verdict->consistent) return kExitVerifyFailed;
  return report.solvable ? kExitSolvable : kExitUnsolvable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-plus global optimization over an affine constraint"};
  app.require_subcommand(1);

  auto* cmd = app.add_subcommand(
      "solve", "solve a problem file and report the optimal set");
  std::string path;
  double tol = maxplus::default_tol;
  bool json = false;
  bool verify = false;
  std::uint64_t seed = 0;
  double radius = 5.0;
  std::size_t samples = 10000;
  cmd->add_option("file", path, "problem file")->required();
  cmd->add_option("--tol", tol, "solvability criterion tolerance");
  cmd->add_flag("--json", json, "emit the report as JSON");
  cmd->add_flag("--verify", verify, "cross-check the report by sampling");
  cmd->add_option("--seed", seed, "sampling seed");
  cmd->add_option("--radius", radius, "sampling box half-width");
  cmd->add_option("--samples", samples, "number of random sample points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    return run_solve(path, tol, json, verify, seed, radius, samples);
  } catch (const maxplus::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const maxplus::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
