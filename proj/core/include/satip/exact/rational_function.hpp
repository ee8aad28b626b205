#pragma once

#include <string>
#include <vector>

#include "satip/exact/polynomial.hpp"

namespace satip::exact {

// Power series quotient N(t)/D(t) kept in canonical form: gcd(N, D) = 1 and
// D(0) = 1. Two functions are equal iff their representatives are equal.
class RationalFunction {
 public:
  RationalFunction(RationalPolynomial numerator, RationalPolynomial denominator);

  const RationalPolynomial& numerator() const noexcept { return num_; }
  const RationalPolynomial& denominator() const noexcept { return den_; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  RationalPolynomial num_;
  RationalPolynomial den_;
};

// Taylor coefficients of t^0..t^n.
std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t n);
std::vector<Rational> series_coefficients(const RationalPolynomial& numerator,
                                          const RationalPolynomial& denominator, std::size_t n);

}  // namespace satip::exact
