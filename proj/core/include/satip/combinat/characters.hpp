#pragma once

#include <vector>

#include "satip/combinat/partition.hpp"
#include "satip/exact/polynomial.hpp"

namespace satip::combinat {

// chi^lambda(rho) by the Murnaghan-Nakayama rule.
Integer sn_character(const Partition& lambda, const CycleType& rho);

// chi^lambda(rho) as the coefficient of x^(lambda + delta) in
// Delta(x) * prod_r p_{rho_r}(x) over k = height(lambda) variables.
Integer frobenius_character(const Partition& lambda, const CycleType& rho);

// Number of ways to write sum_i w_i alpha_i as a sum of positive roots of A_r.
Integer kostant_partition(std::size_t rank, const std::vector<long>& weight);

// Multiplicity of the weight mu in V_lambda(GL_k), k = mu.size(), by Kostant's
// alternating sum over S_k. Equals kostka(lambda, mu).
Integer kostant_weight_multiplicity(const Partition& lambda, const std::vector<long>& mu);

// p(n) = dim V_{n lambda}(GL_k).
exact::RationalPolynomial weyl_dim_poly(std::size_t k, const Partition& lambda);

// dim V_lambda(GL_k).
Integer weyl_dimension(std::size_t k, const Partition& lambda);

}  // namespace satip::combinat
