#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

/// Positive infinity, the top element of the extended scale.
inline constexpr double inf = std::numeric_limits<double>::infinity();

/// Negative infinity, written ε: the zero element of the max-plus algebra.
inline constexpr double eps = -inf;

/// An element of R ∪ {-inf, +inf}, stored as a plain IEEE double.
///
/// The two infinities are ordinary values of the type; NaN is rejected at
/// construction so every ExtScalar is totally ordered by the usual <.
class ExtScalar {
 public:
  /// Default is ε, the additive identity.
  constexpr ExtScalar() noexcept : v_(eps) {}

  /// Implicit by design: finite doubles and ±inf are all legal elements.
  ExtScalar(double v) : v_(v) {
    if (std::isnan(v)) throw DomainError("ExtScalar must not be NaN");
  }

  double value() const noexcept { return v_; }

  bool is_neg_inf() const noexcept { return v_ == eps; }
  bool is_pos_inf() const noexcept { return v_ == inf; }
  bool is_finite() const noexcept { return std::isfinite(v_); }

  friend bool operator==(ExtScalar a, ExtScalar b) noexcept {
    return a.v_ == b.v_;
  }
  friend bool operator!=(ExtScalar a, ExtScalar b) noexcept {
    return a.v_ != b.v_;
  }
  friend bool operator<(ExtScalar a, ExtScalar b) noexcept {
    return a.v_ < b.v_;
  }
  friend bool operator<=(ExtScalar a, ExtScalar b) noexcept {
    return a.v_ <= b.v_;
  }
  friend bool operator>(ExtScalar a, ExtScalar b) noexcept {
    return a.v_ > b.v_;
  }
  friend bool operator>=(ExtScalar a, ExtScalar b) noexcept {
    return a.v_ >= b.v_;
  }

 private:
  double v_;
};

namespace detail {

inline std::string operand_name(ExtScalar s) {
  if (s.is_neg_inf()) return "-inf";
  if (s.is_pos_inf()) return "+inf";
  return std::to_string(s.value());
}

}  // namespace detail

/// Max-plus addition a ⊕ b = max{a, b}.
inline ExtScalar oplus(ExtScalar a, ExtScalar b) {
  return a < b ? b : a;
}

/// Max-plus multiplication a ⊗ b = a + b, with ε absorbing: in particular
/// (+inf) + (-inf) = -inf, so ε stays the zero element on the extended scale.
inline ExtScalar otimes(ExtScalar a, ExtScalar b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtScalar{eps};
  return ExtScalar{a.value() + b.value()};
}

/// Extended subtraction a - b.  Defined for every pair except
/// (+inf) - (+inf), (-inf) - (+inf) and (+inf) - (-inf), which throw;
/// the one defined mixed case is (-inf) - (-inf) = +inf.
inline ExtScalar ext_sub(ExtScalar a, ExtScalar b) {
  if (b.is_neg_inf()) {
    if (a.is_pos_inf())
      throw UndefinedExtOp("undefined extended subtraction: +inf - -inf");
    return ExtScalar{inf};
  }
  if (b.is_pos_inf()) {
    if (!a.is_finite())
      throw UndefinedExtOp("undefined extended subtraction: " +
                           detail::operand_name(a) + " - +inf");
    return ExtScalar{eps};
  }
  // b finite: covers finite - finite and (±inf) - finite.
  return ExtScalar{a.value() - b.value()};
}

/// Scaling p * a by a conventional nonnegative real p, with 0 * (±inf) = 0.
inline ExtScalar ext_scale(double p, ExtScalar a) {
  if (std::isnan(p) || p < 0.0 || p == inf)
    throw DomainError("scale factor must be a finite nonnegative real");
  if (p == 0.0) return ExtScalar{0.0};
  if (!a.is_finite()) return a;
  return ExtScalar{p * a.value()};
}

/// Division a / p by a conventional positive real p; infinities pass through.
inline ExtScalar ext_div(ExtScalar a, double p) {
  if (std::isnan(p) || !(p > 0.0) || p == inf)
    throw DomainError("divisor must be a finite positive real");
  if (!a.is_finite()) return a;
  return ExtScalar{a.value() / p};
}

}  // namespace maxplus
