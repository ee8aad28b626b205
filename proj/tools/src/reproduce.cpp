#include "satip_cli/reproduce.hpp"

#include <algorithm>
#include <cmath>

#include "satip/combinat/characters.hpp"
#include "satip/combinat/partition.hpp"
#include "satip/multiplicity/multiplicity.hpp"
#include "satip_cli/fixtures.hpp"

namespace satip::cli {

namespace {

using exact::Rational;
using exact::RationalPolynomial;

RationalPolynomial parse_polynomial(const std::vector<std::string>& coeffs) {
  std::vector<Rational> out;
  for (const auto& c : coeffs) out.push_back(exact::parse_rational(c));
  return RationalPolynomial(std::move(out));
}

json finish(json rows) {
  const auto passed = static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const json& r) { return r["status"] == "PASS"; }));
  return {{"rows", rows}, {"passed", passed}, {"failed", rows.size() - passed}};
}

std::string power_string(const std::string& base, std::size_t e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace

std::string positive_form_string(const quasipoly::PositiveForm& f) {
  std::string num = f.numerator_polynomial().to_string("t");
  std::string den;
  for (const auto& factor : f.denominator) {
    const std::string term = factor.a == 1 ? "1-t" : "1-t^" + std::to_string(factor.a);
    den += power_string("(" + term + ")", factor.mult);
  }
  return "(" + num + ")/" + (f.denominator.size() == 1 && f.denominator[0].mult == 1 ? den : "(" + den + ")");
}

json reproduce_kronecker(std::size_t threads, long horizon) {
  constexpr std::size_t kTerms = 12;
  json rows = json::array();
  const auto& fixtures = kronecker_fixtures();
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const KroneckerFixture& fx = fixtures[i];
    multiplicity::StretchSpec spec;
    spec.kind = multiplicity::StretchKind::Kronecker2Row;
    spec.labels = {combinat::Partition(fx.lambda), combinat::Partition(fx.mu), combinat::Partition(fx.pi)};
    spec.horizon = horizon;
    spec.period_bound = 2;
    spec.degree_bound = 2;
    spec.threads = threads;
    const multiplicity::StretchResult r = multiplicity::stretching_quasipolynomial(spec);

    const RationalPolynomial odd = parse_polynomial(fx.odd), even = parse_polynomial(fx.even);
    const RationalPolynomial num = parse_polynomial(fx.numerator), den = parse_polynomial(fx.denominator);
    const bool odd_match = r.quasi_polynomial.constituent_for(1) == odd;
    const bool even_match = r.quasi_polynomial.constituent_for(2) == even;
    const auto printed = exact::series_coefficients(num, den, kTerms - 1);
    // The printed function with one factor (1 + t) removed from its numerator.
    const auto reduced = exact::series_coefficients(num, den * RationalPolynomial{1, 1}, kTerms - 1);
    bool series_match = false, reduced_match = false;
    std::string form = "none";
    if (r.positive_form) {
      const auto ours = exact::series_coefficients(r.positive_form->numerator_polynomial(),
                                                   r.positive_form->denominator_polynomial(), kTerms - 1);
      series_match = ours == printed;
      reduced_match = ours == reduced;
      form = positive_form_string(*r.positive_form);
    }
    json row = {
        {"table", i < 15 ? "fkron1" : "fkron2"},
        {"row", i < 15 ? i + 1 : i - 14},
        {"lambda", spec.labels[0].to_string()},
        {"mu", spec.labels[1].to_string()},
        {"pi", spec.labels[2].to_string()},
        {"k(1)", exact::to_string(r.samples.front())},
        {"odd", r.quasi_polynomial.constituent_for(1).to_string()},
        {"even", r.quasi_polynomial.constituent_for(2).to_string()},
        {"odd_match", odd_match},
        {"even_match", even_match},
        {"positive_form", form},
        {"printed_F", "(" + num.to_string("t") + ")/(" + den.to_string("t") + ")"},
        {"series_match", series_match},
        {"status", odd_match && even_match && series_match ? "PASS" : "FAIL"},
    };
    if (!series_match && reduced_match) row["note"] = "printed F has an extra factor (1+t); without it the series match";
    rows.push_back(std::move(row));
  }
  return finish(std::move(rows));
}

json reproduce_syminv(long horizon) {
  json rows = json::array();
  for (const SymInvFixture& fx : syminv_fixtures()) {
    const quasipoly::QuasiPolynomial f = multiplicity::syminv_hilbert(fx.k, horizon);
    bool samples_ok = true;
    for (long n = 1; n <= horizon; ++n) {
      samples_ok = samples_ok && f(n) == Rational(static_cast<long>(combinat::partitions(n, fx.k).size()));
    }
    for (std::size_t j = 1; j <= fx.constituents.size(); ++j) {
      const RationalPolynomial printed = parse_polynomial(fx.constituents[j - 1]);
      const RationalPolynomial& ours = f.constituent(j);
      double deviation = 0;
      const std::size_t len = std::max(printed.coefficients().size(), ours.coefficients().size());
      for (std::size_t i = 0; i < len; ++i)
        deviation = std::max(deviation, std::fabs(Rational(ours.coefficient(i) - printed.coefficient(i)).get_d()));
      const bool ok = f.period() == fx.constituents.size() && deviation <= 1e-10 && samples_ok;
      rows.push_back({{"k", fx.k},
                      {"residue", j},
                      {"ours", ours.to_string()},
                      {"printed", printed.to_string()},
                      {"exact", ours == printed},
                      {"max_deviation", deviation},
                      {"samples_checked", horizon},
                      {"samples_ok", samples_ok},
                      {"status", ok ? "PASS" : "FAIL"}});
    }
  }
  return finish(std::move(rows));
}

json reproduce_gp() {
  json rows = json::array();
  for (const GpFixture& fx : gp_fixtures()) {
    const combinat::Partition lambda(fx.lambda);
    const RationalPolynomial printed = parse_polynomial(fx.coefficients);
    json row = {{"k", fx.k}, {"lambda", lambda.to_string()}, {"printed", printed.to_string()}};
    if (lambda.height() > static_cast<std::size_t>(fx.k)) {
      row["status"] = "FAIL";
      row["note"] = "height exceeds k";
      rows.push_back(std::move(row));
      continue;
    }
    const RationalPolynomial ours = combinat::weyl_dim_poly(static_cast<std::size_t>(fx.k), lambda);
    const bool same_degree = ours.degree() == printed.degree();
    const bool integral_leading = exact::is_integer(printed.leading());
    const bool leading_exact = same_degree && ours.leading() == printed.leading();
    double deviation = 0;
    const std::size_t len = std::max(printed.coefficients().size(), ours.coefficients().size());
    for (std::size_t i = 0; i < len; ++i)
      deviation = std::max(deviation, std::fabs(Rational(ours.coefficient(i) - printed.coefficient(i)).get_d()));
    const bool ok = same_degree && deviation <= 1e-6 && (!integral_leading || leading_exact);
    row["ours"] = ours.to_string();
    row["leading_exact"] = leading_exact;
    row["max_deviation"] = deviation;
    row["status"] = ok ? "PASS" : "FAIL";
    if (!same_degree) {
      row["note"] = "degree " + std::to_string(printed.degree()) + " printed, " + std::to_string(ours.degree()) +
                    " for SL_" + std::to_string(fx.k);
    }
    rows.push_back(std::move(row));
  }
  return finish(std::move(rows));
}

}  // namespace satip::cli
