#include "satip/exact/number.hpp"

#include <cctype>
#include <limits>

#include "satip/error.hpp"

namespace satip {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::InconsistentSamples: return "InconsistentSamples";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::HeightViolation: return "HeightViolation";
    case ErrorCode::HeightExceedsRank: return "HeightExceedsRank";
    case ErrorCode::UnsupportedEmbedding: return "UnsupportedEmbedding";
    case ErrorCode::InsufficientHorizon: return "InsufficientHorizon";
    case ErrorCode::InconsistentSpan: return "InconsistentSpan";
    case ErrorCode::RelaxationTooSmall: return "RelaxationTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace satip

namespace satip::exact {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

Integer parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  if (!valid_integer_literal(s)) {
    fail(ErrorCode::InvalidArgument, "not an integer: '" + std::string(text) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  std::string_view den_text = trim(s.substr(slash + 1));
  if (!den_text.empty() && den_text.front() == '-') {
    fail(ErrorCode::InvalidArgument, "negative denominator: '" + std::string(text) + "'");
  }
  return make_rational(num, parse_integer(den_text));
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

Integer ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

std::int64_t to_int64(const Integer& value) {
  if (!mpz_fits_slong_p(value.get_mpz_t())) {
    fail(ErrorCode::Overflow, "integer does not fit in 64 bits: " + value.get_str());
  }
  return static_cast<std::int64_t>(mpz_get_si(value.get_mpz_t()));
}

IntVector clear_denominators(std::span<const Rational> values) {
  Integer scale = 1;
  for (const Rational& v : values) scale = lcm(scale, v.get_den());
  IntVector out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(v.get_num() * (scale / v.get_den()));
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace satip::exact
