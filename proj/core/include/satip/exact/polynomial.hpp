#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "satip/exact/number.hpp"

namespace satip::exact {

// Univariate polynomial with rational coefficients in ascending degree.
// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  // p(x + s)
  RationalPolynomial shifted(const Rational& s) const;
  // p(k x)
  RationalPolynomial scaled_argument(const Rational& k) const;
  // p(x^k)
  RationalPolynomial substitute_power(std::size_t k) const;
  RationalPolynomial truncated(std::size_t max_degree) const;
  RationalPolynomial monic() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);
  RationalPolynomial operator-() const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

  // Human-readable form in the variable `var`, e.g. "1/2*n^2 + n + 1".
  std::string to_string(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// quotient, remainder with deg(remainder) < deg(divisor); divisor must be nonzero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);
// Monic gcd (zero if both are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

RationalPolynomial pow(const RationalPolynomial& p, std::size_t e);

// 1 - t^a
RationalPolynomial one_minus_power(std::size_t a);

// Interpolating polynomial of degree <= points.size()-1 through the given points.
RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace satip::exact
