#include "satip/exact/polynomial.hpp"

#include <sstream>

#include "satip/error.hpp"

namespace satip::exact {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::shifted(const Rational& s) const {
  // Horner in the polynomial ring: ((c_d)(x+s) + c_{d-1})(x+s) + ...
  RationalPolynomial acc;
  const RationalPolynomial x_plus_s({s, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x_plus_s + constant(*it);
  return acc;
}

RationalPolynomial RationalPolynomial::scaled_argument(const Rational& k) const {
  std::vector<Rational> out = coeffs_;
  Rational power = 1;
  for (Rational& c : out) {
    c *= power;
    power *= k;
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::substitute_power(std::size_t k) const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> out((coeffs_.size() - 1) * k + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  return RationalPolynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading();
  return inv * *this;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) { return a + (-b); }

RationalPolynomial RationalPolynomial::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (Rational& c : out) c = -c;
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p) {
  std::vector<Rational> out = p.coeffs_;
  for (Rational& x : out) x *= c;
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& div = b.coefficients();
  if (rem.size() < div.size()) return {RationalPolynomial(), a};
  std::vector<Rational> quot(rem.size() - div.size() + 1, Rational(0));
  const Rational lead_inv = 1 / div.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + div.size() - 1] * lead_inv;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= q * div[j];
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPolynomial pow(const RationalPolynomial& p, std::size_t e) {
  RationalPolynomial result = RationalPolynomial::constant(1);
  RationalPolynomial base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

RationalPolynomial one_minus_power(std::size_t a) {
  return RationalPolynomial::constant(1) - RationalPolynomial::monomial(1, a);
}

RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  // Newton divided differences.
  const std::size_t n = points.size();
  std::vector<Rational> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational dx = points[i].first - points[i - level].first;
      if (dx == 0) fail(ErrorCode::InvalidArgument, "interpolation nodes must be distinct");
      coef[i] = (coef[i] - coef[i - 1]) / dx;
      if (i == level) break;
    }
  }
  RationalPolynomial result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * RationalPolynomial({Rational(-points[i].first), Rational(1)}) +
             RationalPolynomial::constant(coef[i]);
  }
  return result;
}

}  // namespace satip::exact
