#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "satip/combinat/partition.hpp"
#include "satip/polytope/hpolytope.hpp"
#include "satip/quasipoly/quasi_polynomial.hpp"

namespace satip::ip {

using combinat::Partition;
using exact::Integer;
using exact::Rational;
using exact::RationalVector;
using polytope::HPolytope;

// f_P(n) = #(nP cap Z^d) for n = 1..horizon.
std::vector<Integer> ehrhart_samples(const HPolytope& p, long horizon);

// Fit over n = 1..period_bound * (degree_bound + 2); degree_bound defaults to dim(P).
quasipoly::QuasiPolynomial ehrhart_quasipoly(const HPolytope& p, std::size_t period_bound,
                                             std::optional<std::size_t> degree_bound = std::nullopt);

// 0 if P is empty. Otherwise the affine span C x = d becomes D y = U d under
// the Smith form D = U C V; row i asks c_i y_i = n d_i, which is solvable iff
// c_i / gcd(c_i, d_i) divides n, and the index is the lcm of those moduli.
Integer ehrhart_index(const HPolytope& p);

bool affine_span_has_integer_point(const HPolytope& p);

// Exactly one estimate is set; it is trusted, not verified.
struct SaturatedIPInstance {
  HPolytope polytope;
  std::optional<Integer> sie;
  std::optional<Integer> pie;
};

// Whether cP contains an integer point, for c above the estimate.
bool saturated_ip_decide(const SaturatedIPInstance& inst, const Integer& c);

// Hive LP feasibility; n = 0 picks the largest height.
bool lr_nonvanishing(const Partition& alpha, const Partition& beta, const Partition& lambda, std::size_t n = 0);

// Membership of a rational triple in the LR cone: false unless all three are
// dominant, nonnegative and |alpha| + |beta| = |lambda|.
bool lr_nonvanishing(const RationalVector& alpha, const RationalVector& beta, const RationalVector& lambda,
                     std::size_t n = 0);

enum class Obstruction { Geometric, Modular, None };

std::string_view obstruction_name(Obstruction o) noexcept;

// Geometric if Q is empty and P is not; modular if both are nonempty, the
// affine span of Q has no integer point and that of P does.
Obstruction robust_obstruction_check(const HPolytope& p, const HPolytope& q);

}  // namespace satip::ip
