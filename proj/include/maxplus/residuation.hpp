#pragma once

#include "maxplus/matrix.hpp"

namespace maxplus {

/// A system A ⊗ x = b posed over R_max: entries are finite or ε, never +inf.
struct LinearSystem {
  Matrix A;
  Vec b;

  LinearSystem(Matrix A_, Vec b_);
};

/// The greatest x with A ⊗ x <= b, computed by residuation:
/// x*_j = min_i (b_i - a_ij) under the extended subtraction rules.
/// Components may be ±inf; x*_j = +inf exactly when column j of A is all ε.
Vec greatest_subsolution(const LinearSystem& sys);

/// True iff A ⊗ x* = b, i.e. the greatest subsolution actually solves the
/// system; equality is exact, with no tolerance.
bool is_system_solvable(const LinearSystem& sys);

}  // namespace maxplus
