#pragma once

#include <vector>

#include "satip/combinat/partition.hpp"
#include "satip/exact/polynomial.hpp"
#include "satip/polytope/hpolytope.hpp"

namespace satip::combinat {

// Number of semistandard tableaux of the given shape and content. Contents
// with negative entries or the wrong total give 0.
Integer kostka(const Partition& lambda, const std::vector<long>& content);

// The same count for shapes of height <= 4 via Gelfand-Tsetlin patterns;
// content has at most four entries. Linear in pi_1 * pi_2.
Integer kostka_bounded_height(const Partition& pi, const std::vector<long>& content);

// Littlewood-Richardson coefficient c^lambda_{alpha, beta}.
Integer lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& lambda);

// Hive of side n. Vertices are (i, j) with 0 <= j <= i <= n, (0, 0) at the
// apex and h(0, 0) = 0. Boundary:
//   left edge   h(i, 0) = alpha_1 + ... + alpha_i
//   bottom edge h(n, j) = |alpha| + beta_1 + ... + beta_j
//   right edge  h(i, i) = lambda_1 + ... + lambda_i
// The variables are the interior vertices 0 < j < i < n in row-major order.
// Every rhombus made of two adjacent unit triangles satisfies
//   (sum at its obtuse vertices) >= (sum at its acute vertices).
// Integer points are in bijection with LR tableaux.
polytope::HPolytope hive_polytope(const Partition& alpha, const Partition& beta, const Partition& lambda,
                                  std::size_t n);
std::size_t hive_variable_index(std::size_t i, std::size_t j);

}  // namespace satip::combinat
