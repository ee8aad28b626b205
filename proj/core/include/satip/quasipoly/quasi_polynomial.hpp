#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "satip/exact/polynomial.hpp"
#include "satip/exact/rational_function.hpp"

namespace satip::quasipoly {

using exact::Integer;
using exact::Rational;
using exact::RationalFunction;
using exact::RationalPolynomial;

// f(n) = f_j(n) for n = j (mod period), j = 1..period; constituent j is
// stored at index j-1, so the last constituent covers n = 0 (mod period).
class QuasiPolynomial {
 public:
  QuasiPolynomial() : QuasiPolynomial(1, {RationalPolynomial()}) {}
  QuasiPolynomial(std::size_t period, std::vector<RationalPolynomial> constituents);

  static QuasiPolynomial polynomial(RationalPolynomial p) { return QuasiPolynomial(1, {std::move(p)}); }

  std::size_t period() const noexcept { return constituents_.size(); }
  const std::vector<RationalPolynomial>& constituents() const noexcept { return constituents_; }
  // Constituent governing residue j (1 <= j <= period).
  const RationalPolynomial& constituent(std::size_t j) const { return constituents_[j - 1]; }
  // Constituent governing the integer n (any sign).
  const RationalPolynomial& constituent_for(std::int64_t n) const;

  // Max constituent degree; -1 for the zero quasi-polynomial.
  long degree() const noexcept;
  bool is_zero() const noexcept;

  Rational operator()(std::int64_t n) const;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

 private:
  std::vector<RationalPolynomial> constituents_;
};

struct Sample {
  std::int64_t n;
  Rational value;
};

Rational eval(const QuasiPolynomial& f, std::int64_t n);

// Per-residue interpolation at degree <= `degree`; every sample is checked.
QuasiPolynomial fit(const std::vector<Sample>& samples, std::size_t period, std::size_t degree);

// Tries periods 1..period_bound and, within each, degrees 0..degree_bound;
// returns the first fit consistent with every sample. Pairs without enough
// samples per residue are skipped.
std::optional<QuasiPolynomial> fit_search(const std::vector<Sample>& samples, std::size_t period_bound,
                                          std::size_t degree_bound);

// Representation with the smallest period that agrees with f on every residue.
QuasiPolynomial minimal_period(const QuasiPolynomial& f);

// Smallest j with constituent j not identically zero; 0 for f == 0.
std::size_t index(const QuasiPolynomial& f);

// g(n) = f(n + s), same period.
QuasiPolynomial shift(const QuasiPolynomial& f, std::size_t s);

// p(n) > 0 for every integer n >= 1.
bool positive_on_positive_integers(const RationalPolynomial& p);

// Every constituent is zero or strictly positive on n >= 1.
bool strictly_saturated(const QuasiPolynomial& f);
// Every constituent has nonnegative coefficients.
bool positive(const QuasiPolynomial& f);

std::size_t saturation_index(const QuasiPolynomial& f, std::size_t cap);
std::size_t positivity_index(const QuasiPolynomial& f, std::size_t cap);

// Sum_{n >= 0} f(n) t^n in canonical form.
RationalFunction generating_function(const QuasiPolynomial& f);

}  // namespace satip::quasipoly
