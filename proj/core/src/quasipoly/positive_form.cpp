#include "satip/quasipoly/positive_form.hpp"

#include <algorithm>

namespace satip::quasipoly {

using exact::RationalPolynomial;

std::size_t PositiveForm::modular_index() const {
  std::size_t m = 0;
  for (const DenominatorFactor& f : denominator) m = std::max(m, f.a);
  return m;
}

RationalPolynomial PositiveForm::numerator_polynomial() const {
  std::vector<exact::Rational> c;
  for (const Integer& x : h) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial PositiveForm::denominator_polynomial() const {
  RationalPolynomial d = RationalPolynomial::constant(1);
  for (const DenominatorFactor& f : denominator) d = d * exact::pow(exact::one_minus_power(f.a), f.mult);
  return d;
}

namespace {

void multisets(std::size_t size, std::size_t max_a, std::vector<std::size_t>& current,
               std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  const std::size_t start = current.empty() ? 1 : current.back();
  for (std::size_t a = start; a <= max_a; ++a) {
    current.push_back(a);
    multisets(size, max_a, current, out);
    current.pop_back();
  }
}

}  // namespace

std::optional<PositiveForm> positive_form_search(const RationalFunction& f, std::size_t degree,
                                                 std::size_t max_a) {
  if (max_a == 0) return std::nullopt;
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> current;
  multisets(degree + 1, max_a, current, candidates);
  auto total = [](const std::vector<std::size_t>& v) {
    std::size_t s = 0;
    for (std::size_t a : v) s += a;
    return s;
  };
  std::stable_sort(candidates.begin(), candidates.end(), [&](const auto& x, const auto& y) {
    const std::size_t sx = total(x), sy = total(y);
    if (sx != sy) return sx < sy;
    return x < y;
  });

  for (const auto& as : candidates) {
    PositiveForm form;
    for (std::size_t a : as) {
      if (!form.denominator.empty() && form.denominator.back().a == a) {
        ++form.denominator.back().mult;
      } else {
        form.denominator.push_back({a, 1});
      }
    }
    auto [q, r] = exact::divmod(f.numerator() * form.denominator_polynomial(), f.denominator());
    if (!r.is_zero() || q.is_zero() || q.coefficient(0) != 1) continue;
    bool ok = true;
    for (const exact::Rational& c : q.coefficients()) {
      if (c < 0 || !exact::is_integer(c)) {
        ok = false;
        break;
      }
      form.h.push_back(c.get_num());
    }
    if (ok) return form;
  }
  return std::nullopt;
}

}  // namespace satip::quasipoly
