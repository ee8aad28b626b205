#include "satip/exact/rational_function.hpp"

#include "satip/error.hpp"

namespace satip::exact {

RationalFunction::RationalFunction(RationalPolynomial numerator, RationalPolynomial denominator) {
  if (denominator.is_zero()) fail(ErrorCode::InvalidArgument, "rational function with zero denominator");
  if (numerator.is_zero()) {
    num_ = {};
    den_ = RationalPolynomial::constant(1);
    return;
  }
  const RationalPolynomial g = gcd(numerator, denominator);
  auto [n, nr] = divmod(numerator, g);
  auto [d, dr] = divmod(denominator, g);
  const Rational d0 = d.coefficient(0);
  if (d0 == 0) fail(ErrorCode::InvalidArgument, "denominator vanishes at t = 0; not a power series");
  const Rational scale = 1 / d0;
  num_ = scale * n;
  den_ = scale * d;
}

std::string RationalFunction::to_string(const std::string& var) const {
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::vector<Rational> series_coefficients(const RationalPolynomial& numerator,
                                          const RationalPolynomial& denominator, std::size_t n) {
  const Rational d0 = denominator.coefficient(0);
  if (d0 == 0) fail(ErrorCode::InvalidArgument, "denominator vanishes at t = 0");
  const auto& den = denominator.coefficients();
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = numerator.coefficient(k);
    for (std::size_t j = 1; j < den.size() && j <= k; ++j) acc -= den[j] * out[k - j];
    out[k] = acc / d0;
  }
  return out;
}

std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t n) {
  return series_coefficients(f.numerator(), f.denominator(), n);
}

}  // namespace satip::exact
