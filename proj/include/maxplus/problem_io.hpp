#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "maxplus/oracle.hpp"
#include "maxplus/optimize.hpp"

namespace maxplus {

/// Parse the problem-file format:
///
///   # comment
///   matrix
///   0 eps 2
///   1 3 eps
///   k
///   1 0 2
///   c
///   2
///
/// Sections may appear in any order, each exactly once; `eps` denotes -inf
/// and is legal only inside the matrix.  Both LF and CRLF line endings are
/// accepted.  Errors carry a 1-based line and column.
OptProblem parse_problem(std::string_view text);

/// Render a problem back into the file format; parsing the result yields an
/// identical problem.
std::string format_problem(const OptProblem& p);

/// Shortest decimal string that round-trips the value; infinities are the
/// tokens "-inf" and "+inf".
std::string format_scalar(ExtScalar s);

/// "[a, b, c]" with format_scalar entries.
std::string format_vec(const Vec& v);

/// Human-readable solve report, optionally with an oracle verdict appended.
std::string render_report_text(const SolveReport& r,
                               const std::optional<OracleVerdict>& verdict);

/// The same report as a flat single-object JSON document with deterministic
/// key order; infinite values use the "-inf"/"+inf" tokens.
std::string render_report_json(const SolveReport& r,
                               const std::optional<OracleVerdict>& verdict);

}  // namespace maxplus
