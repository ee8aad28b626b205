#pragma once

#include <optional>
#include <span>
#include <vector>

#include "satip/exact/matrix.hpp"

namespace satip::exact {

// D = U * A * V with U, V unimodular, D diagonal and d_1 | d_2 | ... | d_rank.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
};

// Pivots on the nonzero entry of minimal absolute value at every step.
SmithDecomposition smith_normal_form(const IntMatrix& a);

struct RationalSolution {
  RationalVector particular;
  std::vector<RationalVector> nullspace_basis;
};

// General solution of A x = b over Q, or nullopt if the system is inconsistent.
std::optional<RationalSolution> solve_rational(const RationalMatrix& a, std::span<const Rational> b);

// Rank over Q.
std::size_t rank(const RationalMatrix& a);

}  // namespace satip::exact
