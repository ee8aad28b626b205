#pragma once

#include <optional>
#include <vector>

#include "satip/exact/rational_function.hpp"

namespace satip::quasipoly {

using exact::Integer;
using exact::RationalFunction;

struct DenominatorFactor {
  std::size_t a = 1;     // factor (1 - t^a)
  std::size_t mult = 1;  // its exponent

  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

// h(t) / prod (1 - t^a_j)^mult_j with h_0 = 1 and all h_i >= 0.
struct PositiveForm {
  std::vector<Integer> h;
  std::vector<DenominatorFactor> denominator;

  std::size_t modular_index() const;
  exact::RationalPolynomial numerator_polynomial() const;
  exact::RationalPolynomial denominator_polynomial() const;

  friend bool operator==(const PositiveForm&, const PositiveForm&) = default;
};

// Searches factor multisets with sum(mult) = degree + 1 and every a <= max_a,
// ordered by the total degree sum(a * mult) and then lexicographically on the
// ascending list of a's; returns the first candidate with h_0 = 1 and h a
// polynomial with nonnegative integer coefficients.
std::optional<PositiveForm> positive_form_search(const RationalFunction& f, std::size_t degree,
                                                 std::size_t max_a);

}  // namespace satip::quasipoly
