#include "maxplus/residuation.hpp"

#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

LinearSystem::LinearSystem(Matrix A_, Vec b_) : A(std::move(A_)), b(std::move(b_)) {
  if (A.rows() != b.size())
    throw DimensionMismatch("linear system: matrix has " +
                            std::to_string(A.rows()) +
                            " rows but right-hand side has " +
                            std::to_string(b.size()) + " entries");
  if (A.has_pos_inf())
    throw DomainError(
        "linear system: matrix entries must be in R_max (finite or -inf)");
  for (ExtScalar v : b)
    if (v.is_pos_inf())
      throw DomainError(
          "linear system: right-hand side entries must be in R_max (finite or -inf)");
}

Vec greatest_subsolution(const LinearSystem& sys) {
  const Matrix& A = sys.A;
  Vec x(A.cols(), ExtScalar{inf});
  for (std::size_t j = 0; j < A.cols(); ++j) {
    // min over rows of b_i - a_ij; a_ij = ε contributes +inf and drops out,
    // so a column of all ε leaves x_j at +inf.
    ExtScalar best{inf};
    for (std::size_t i = 0; i < A.rows(); ++i) {
      ExtScalar diff = ext_sub(sys.b[i], A(i, j));
      if (diff < best) best = diff;
    }
    x[j] = best;
  }
  return x;
}

bool is_system_solvable(const LinearSystem& sys) {
  Vec x = greatest_subsolution(sys);
  return otimes(sys.A, x) == sys.b;
}

}  // namespace maxplus
