#include "maxplus/problem_io.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

struct Token {
  std::string text;
  std::size_t line;  // 1-based
  std::size_t col;   // 1-based
};

// Split into lines (LF or CRLF), strip comments, and tokenize on blanks.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = end == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      tokens.push_back(
          Token{std::string(line.substr(start, i - start)), line_no, start + 1});
    }
    lines.push_back(std::move(tokens));
    if (end == std::string_view::npos) break;
    pos = end + 1;
    ++line_no;
  }
  return lines;
}

double parse_number(const Token& tok, const char* what) {
  std::string_view s = tok.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(fmt::format("malformed {} '{}'", what, tok.text), tok.line,
                     tok.col);
  return value;
}

}  // namespace

OptProblem parse_problem(std::string_view text) {
  auto lines = tokenize(text);

  std::vector<std::vector<Token>> matrix_rows;
  std::vector<Token> k_tokens, c_tokens;
  bool seen_matrix = false, seen_k = false, seen_c = false;
  enum class Section { None, MatrixRows, K, C } current = Section::None;

  for (const auto& tokens : lines) {
    if (tokens.empty()) continue;
    const std::string& head = tokens.front().text;
    if (head == "matrix" || head == "k" || head == "c") {
      if (tokens.size() > 1)
        throw ParseError(
            fmt::format("unexpected token after section header '{}'", head),
            tokens[1].line, tokens[1].col);
      bool& seen = head == "matrix" ? seen_matrix : head == "k" ? seen_k : seen_c;
      if (seen)
        throw ParseError(fmt::format("duplicate section '{}'", head),
                         tokens[0].line, tokens[0].col);
      seen = true;
      current = head == "matrix" ? Section::MatrixRows
                : head == "k"    ? Section::K
                                 : Section::C;
      continue;
    }
    switch (current) {
      case Section::None:
        throw ParseError(
            fmt::format("expected a section header, got '{}'", head),
            tokens[0].line, tokens[0].col);
      case Section::MatrixRows:
        matrix_rows.push_back(tokens);
        break;
      case Section::K:
        k_tokens.insert(k_tokens.end(), tokens.begin(), tokens.end());
        break;
      case Section::C:
        c_tokens.insert(c_tokens.end(), tokens.begin(), tokens.end());
        break;
    }
  }

  std::size_t last_line = lines.size();
  if (!seen_matrix) throw ParseError("missing section 'matrix'", last_line, 1);
  if (!seen_k) throw ParseError("missing section 'k'", last_line, 1);
  if (!seen_c) throw ParseError("missing section 'c'", last_line, 1);
  if (matrix_rows.empty())
    throw ParseError("section 'matrix' has no rows", last_line, 1);

  const std::size_t n = matrix_rows.front().size();
  Matrix A(matrix_rows.size(), n);
  for (std::size_t i = 0; i < matrix_rows.size(); ++i) {
    const auto& row = matrix_rows[i];
    if (row.size() != n)
      throw ParseError(
          fmt::format("ragged matrix row: expected {} entries, got {}", n,
                      row.size()),
          row.front().line, row.front().col);
    for (std::size_t j = 0; j < n; ++j) {
      const Token& tok = row[j];
      if (tok.text == "eps") {
        A(i, j) = ExtScalar{eps};
        continue;
      }
      double v = parse_number(tok, "matrix entry");
      if (!std::isfinite(v))
        throw ParseError(
            fmt::format("matrix entries must be in R_max (got '{}')", tok.text),
            tok.line, tok.col);
      A(i, j) = ExtScalar{v};
    }
  }

  if (k_tokens.size() != n)
    throw ParseError(fmt::format("expected {} k coefficients, got {}", n,
                                 k_tokens.size()),
                     k_tokens.empty() ? last_line : k_tokens.front().line,
                     k_tokens.empty() ? 1 : k_tokens.front().col);
  std::vector<double> k(n);
  bool any_positive = false;
  for (std::size_t j = 0; j < n; ++j) {
    double v = parse_number(k_tokens[j], "k coefficient");
    if (!std::isfinite(v))
      throw ParseError("k coefficients must be finite", k_tokens[j].line,
                       k_tokens[j].col);
    if (v < 0.0)
      throw ParseError("k coefficients must be nonnegative", k_tokens[j].line,
                       k_tokens[j].col);
    if (v > 0.0) any_positive = true;
    k[j] = v;
  }
  if (!any_positive)
    throw ParseError("k must not be all zero", k_tokens.front().line,
                     k_tokens.front().col);

  if (c_tokens.size() != 1)
    throw ParseError(
        fmt::format("expected exactly one c value, got {}", c_tokens.size()),
        c_tokens.empty() ? last_line : c_tokens.front().line,
        c_tokens.empty() ? 1 : c_tokens.front().col);
  double c = parse_number(c_tokens[0], "c value");
  if (!std::isfinite(c))
    throw ParseError("c must be finite", c_tokens[0].line, c_tokens[0].col);

  return OptProblem(std::move(A), std::move(k), c);
}

std::string format_scalar(ExtScalar s) {
  if (s.is_neg_inf()) return "-inf";
  if (s.is_pos_inf()) return "+inf";
  double v = s.value();
  if (v == 0.0) v = 0.0;  // fold -0 into 0
  return fmt::format("{}", v);
}

std::string format_vec(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_scalar(v[i]);
  }
  out += "]";
  return out;
}

namespace {

std::string format_weight(double v) {
  if (v == 0.0) v = 0.0;
  return fmt::format("{}", v);
}

// 1-based index list for display, e.g. "2, 4"; "none" when empty.
std::string format_indices(const std::vector<std::size_t>& idx) {
  if (idx.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(idx[i] + 1);
  }
  return out;
}

std::string describe_solutions(const SolutionSet& set) {
  std::string out;
  for (std::size_t j = 0; j < set.vars.size(); ++j) {
    if (j) out += "; ";
    const VarConstraint& vc = set.vars[j];
    switch (vc.kind) {
      case Constraint::EqualTo:
        out += fmt::format("x{} = {}", j + 1, format_scalar(vc.bound));
        break;
      case Constraint::AtMost:
        out += fmt::format("x{} <= {}", j + 1, format_scalar(vc.bound));
        break;
      case Constraint::Free:
        out += fmt::format("x{} free", j + 1);
        break;
    }
  }
  return out;
}

}  // namespace

std::string format_problem(const OptProblem& p) {
  std::string out = "matrix\n";
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      if (j) out += ' ';
      ExtScalar a = p.A(i, j);
      out += a.is_neg_inf() ? "eps" : format_scalar(a);
    }
    out += '\n';
  }
  out += "k\n";
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    if (j) out += ' ';
    out += format_weight(p.k[j]);
  }
  out += "\nc\n";
  out += format_weight(p.c);
  out += '\n';
  return out;
}

std::string render_report_text(const SolveReport& r,
                               const std::optional<OracleVerdict>& verdict) {
  const std::size_t rows =
      r.preprocess.kept_rows.size() + r.preprocess.dropped_rows.size();
  const std::size_t cols =
      r.preprocess.kept_vars.size() + r.preprocess.eliminated_vars.size();
  std::string out;
  out += fmt::format("problem: {} rows, {} variables\n", rows, cols);
  out += fmt::format("dropped rows: {}\n", format_indices(r.preprocess.dropped_rows));
  out += fmt::format("eliminated variables: {}\n",
                     format_indices(r.preprocess.eliminated_vars));
  out += fmt::format("greatest lower bound b: {}\n", format_vec(r.lower_bound));
  out += fmt::format("greatest subsolution x*: {}\n",
                     format_vec(r.greatest_subsolution));
  if (r.criterion_sum)
    out += fmt::format("criterion sum: {} (c = {}, tol = {})\n",
                       format_weight(*r.criterion_sum),
                       format_weight(r.preprocess.reduced.c),
                       format_weight(r.tol));
  else
    out += fmt::format("criterion sum: undefined (c = {}, tol = {})\n",
                       format_weight(r.preprocess.reduced.c),
                       format_weight(r.tol));
  out += fmt::format("solvable: {}\n", r.solvable ? "yes" : "no");
  out += fmt::format("unique: {}\n", r.solvable ? (r.unique ? "yes" : "no") : "n/a");
  if (r.solutions)
    out += fmt::format("solution set: {}\n", describe_solutions(*r.solutions));
  if (r.alternative)
    out += fmt::format("alternative optimum: {}\n", format_vec(*r.alternative));
  if (verdict) {
    if (verdict->consistent)
      out += fmt::format("oracle: consistent ({})\n", verdict->detail);
    else
      out += fmt::format("oracle: INCONSISTENT ({})\n", verdict->detail);
    if (verdict->counterexample) {
      Vec ce(verdict->counterexample->size(), ExtScalar{0.0});
      for (std::size_t j = 0; j < ce.size(); ++j)
        ce[j] = ExtScalar{(*verdict->counterexample)[j]};
      out += fmt::format("counterexample: {}\n", format_vec(ce));
    }
  }
  return out;
}

std::string render_report_json(const SolveReport& r,
                               const std::optional<OracleVerdict>& verdict) {
  nlohmann::ordered_json doc;
  doc["rows"] =
      r.preprocess.kept_rows.size() + r.preprocess.dropped_rows.size();
  doc["cols"] =
      r.preprocess.kept_vars.size() + r.preprocess.eliminated_vars.size();
  doc["dropped_rows"] = format_indices(r.preprocess.dropped_rows);
  doc["eliminated_vars"] = format_indices(r.preprocess.eliminated_vars);
  doc["b"] = format_vec(r.lower_bound);
  doc["x_star"] = format_vec(r.greatest_subsolution);
  if (r.criterion_sum)
    doc["criterion_sum"] = format_weight(*r.criterion_sum);
  else
    doc["criterion_sum"] = nullptr;
  doc["c"] = format_weight(r.preprocess.reduced.c);
  doc["tol"] = format_weight(r.tol);
  doc["solvable"] = r.solvable;
  if (r.solvable)
    doc["unique"] = r.unique;
  else
    doc["unique"] = nullptr;
  if (r.solutions)
    doc["solution_set"] = describe_solutions(*r.solutions);
  else
    doc["solution_set"] = nullptr;
  if (r.alternative)
    doc["alternative"] = format_vec(*r.alternative);
  else
    doc["alternative"] = nullptr;
  if (verdict) {
    doc["oracle_consistent"] = verdict->consistent;
    doc["oracle_detail"] = verdict->detail;
    doc["oracle_samples"] = verdict->samples_checked;
  } else {
    doc["oracle_consistent"] = nullptr;
    doc["oracle_detail"] = nullptr;
    doc["oracle_samples"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

}  // namespace maxplus
