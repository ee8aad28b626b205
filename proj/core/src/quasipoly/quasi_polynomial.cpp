#include "satip/quasipoly/quasi_polynomial.hpp"

#include <algorithm>
#include <map>

#include "satip/error.hpp"

namespace satip::quasipoly {

QuasiPolynomial::QuasiPolynomial(std::size_t period, std::vector<RationalPolynomial> constituents)
    : constituents_(std::move(constituents)) {
  if (period == 0) fail(ErrorCode::InvalidArgument, "period must be positive");
  if (constituents_.size() != period) {
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(period) + " constituents, got " +
                                         std::to_string(constituents_.size()));
  }
}

const RationalPolynomial& QuasiPolynomial::constituent_for(std::int64_t n) const {
  const auto l = static_cast<std::int64_t>(period());
  std::int64_t r = n % l;
  if (r <= 0) r += l;
  return constituents_[static_cast<std::size_t>(r - 1)];
}

long QuasiPolynomial::degree() const noexcept {
  long d = -1;
  for (const RationalPolynomial& p : constituents_) d = std::max(d, p.degree());
  return d;
}

bool QuasiPolynomial::is_zero() const noexcept {
  return std::all_of(constituents_.begin(), constituents_.end(),
                     [](const RationalPolynomial& p) { return p.is_zero(); });
}

Rational QuasiPolynomial::operator()(std::int64_t n) const { return constituent_for(n)(Rational(n)); }

Rational eval(const QuasiPolynomial& f, std::int64_t n) { return f(n); }

QuasiPolynomial fit(const std::vector<Sample>& samples, std::size_t period, std::size_t degree) {
  if (period == 0) fail(ErrorCode::InvalidArgument, "period must be positive");
  std::vector<std::map<std::int64_t, Rational>> by_residue(period);
  for (const Sample& s : samples) {
    auto& bucket = by_residue[static_cast<std::size_t>(((s.n - 1) % static_cast<std::int64_t>(period) +
                                                        static_cast<std::int64_t>(period)) %
                                                       static_cast<std::int64_t>(period))];
    auto [it, inserted] = bucket.emplace(s.n, s.value);
    if (!inserted && it->second != s.value) {
      fail(ErrorCode::InconsistentSamples, "two different values given at n = " + std::to_string(s.n));
    }
  }
  std::vector<RationalPolynomial> constituents;
  for (std::size_t j = 0; j < period; ++j) {
    const auto& bucket = by_residue[j];
    if (bucket.size() < degree + 1) {
      fail(ErrorCode::InsufficientSamples, "residue " + std::to_string(j + 1) + " mod " +
                                               std::to_string(period) + " has " +
                                               std::to_string(bucket.size()) + " samples, need " +
                                               std::to_string(degree + 1));
    }
    std::vector<std::pair<Rational, Rational>> points;
    for (const auto& [n, v] : bucket) {
      if (points.size() == degree + 1) break;
      points.emplace_back(Rational(n), v);
    }
    RationalPolynomial p = exact::interpolate(points);
    for (const auto& [n, v] : bucket) {
      if (p(Rational(n)) != v) {
        fail(ErrorCode::InconsistentSamples, "samples of residue " + std::to_string(j + 1) + " mod " +
                                                 std::to_string(period) + " do not lie on a polynomial of degree " +
                                                 std::to_string(degree));
      }
    }
    constituents.push_back(std::move(p));
  }
  return QuasiPolynomial(period, std::move(constituents));
}

std::optional<QuasiPolynomial> fit_search(const std::vector<Sample>& samples, std::size_t period_bound,
                                          std::size_t degree_bound) {
  for (std::size_t l = 1; l <= period_bound; ++l)
    for (std::size_t d = 0; d <= degree_bound; ++d) {
      try {
        return fit(samples, l, d);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InsufficientSamples && e.code() != ErrorCode::InconsistentSamples) throw;
      }
    }
  return std::nullopt;
}

QuasiPolynomial minimal_period(const QuasiPolynomial& f) {
  const std::size_t l = f.period();
  for (std::size_t p = 1; p < l; ++p) {
    if (l % p != 0) continue;
    bool ok = true;
    for (std::size_t j = p; j < l && ok; ++j) ok = f.constituents()[j] == f.constituents()[j % p];
    if (ok) {
      return QuasiPolynomial(p, std::vector<RationalPolynomial>(f.constituents().begin(),
                                                               f.constituents().begin() + static_cast<long>(p)));
    }
  }
  return f;
}

std::size_t index(const QuasiPolynomial& f) {
  const QuasiPolynomial g = minimal_period(f);
  for (std::size_t j = 1; j <= g.period(); ++j)
    if (!g.constituent(j).is_zero()) return j;
  return 0;
}

QuasiPolynomial shift(const QuasiPolynomial& f, std::size_t s) {
  const std::size_t l = f.period();
  std::vector<RationalPolynomial> out;
  out.reserve(l);
  for (std::size_t j = 1; j <= l; ++j) {
    const std::size_t source = (j + s - 1) % l + 1;
    out.push_back(f.constituent(source).shifted(Rational(static_cast<unsigned long>(s))));
  }
  return QuasiPolynomial(l, std::move(out));
}

namespace {

// Smallest integer b >= 0 with b^e >= r (r >= 0, e >= 1).
Integer integer_root_ceiling(const Rational& r, unsigned long e) {
  const Integer target = exact::ceil(r);
  if (target <= 1) return target <= 0 ? Integer(0) : Integer(1);
  Integer lo = 1, hi = 1;
  auto power = [&](const Integer& b) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
  };
  while (power(hi) < target) hi *= 2;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (power(mid) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

}  // namespace

bool positive_on_positive_integers(const RationalPolynomial& p) {
  if (p.is_zero() || p.leading() <= 0) return false;
  const long d = p.degree();
  if (d == 0) return true;
  // Fujiwara's bound: every root z satisfies |z| <= 2 max_i |a_{d-i}/a_d|^{1/i}.
  Integer bound = 0;
  for (long i = 1; i <= d; ++i) {
    Rational r = p.coefficient(static_cast<std::size_t>(d - i)) / p.leading();
    if (r < 0) r = -r;
    bound = std::max(bound, integer_root_ceiling(r, static_cast<unsigned long>(i)));
  }
  bound *= 2;
  for (Integer n = 1; n <= bound; ++n)
    if (p(Rational(n)) <= 0) return false;
  return true;
}

bool strictly_saturated(const QuasiPolynomial& f) {
  return std::all_of(f.constituents().begin(), f.constituents().end(), [](const RationalPolynomial& p) {
    return p.is_zero() || positive_on_positive_integers(p);
  });
}

bool positive(const QuasiPolynomial& f) {
  for (const RationalPolynomial& p : f.constituents())
    for (const Rational& c : p.coefficients())
      if (c < 0) return false;
  return true;
}

std::size_t saturation_index(const QuasiPolynomial& f, std::size_t cap) {
  for (std::size_t s = 0; s <= cap; ++s)
    if (strictly_saturated(shift(f, s))) return s;
  fail(ErrorCode::CapExceeded, "no shift up to " + std::to_string(cap) + " is strictly saturated");
}

std::size_t positivity_index(const QuasiPolynomial& f, std::size_t cap) {
  for (std::size_t s = 0; s <= cap; ++s)
    if (positive(shift(f, s))) return s;
  fail(ErrorCode::CapExceeded, "no shift up to " + std::to_string(cap) + " has nonnegative coefficients");
}

RationalFunction generating_function(const QuasiPolynomial& f) {
  if (f.is_zero()) return RationalFunction(RationalPolynomial(), RationalPolynomial::constant(1));
  const std::size_t l = f.period();
  const auto e = static_cast<std::size_t>(f.degree()) + 1;
  const std::size_t terms = l * e;
  std::vector<Rational> series;
  series.reserve(terms);
  for (std::size_t n = 0; n < terms; ++n) series.push_back(f(static_cast<std::int64_t>(n)));
  const RationalPolynomial den = exact::pow(exact::one_minus_power(l), e);
  const RationalPolynomial num = (RationalPolynomial(std::move(series)) * den).truncated(terms - 1);
  return RationalFunction(num, den);
}

}  // namespace satip::quasipoly
