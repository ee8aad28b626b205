#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "satip/combinat/characters.hpp"
#include "satip/combinat/partition.hpp"
#include "satip/combinat/tableaux.hpp"
#include "satip/exact/rational_function.hpp"
#include "satip/ip/saturated_ip.hpp"
#include "satip/multiplicity/multiplicity.hpp"
#include "support/oracles.hpp"

namespace {

using namespace satip;
using combinat::Partition;
using exact::Integer;
using exact::Rational;
using exact::RationalPolynomial;

RationalPolynomial poly(const std::vector<std::string>& coeffs) {
  std::vector<Rational> out;
  for (const auto& c : coeffs) out.push_back(exact::parse_rational(c));
  return RationalPolynomial(std::move(out));
}

double max_deviation(const RationalPolynomial& ours, const RationalPolynomial& printed, std::size_t from = 0) {
  double d = 0;
  const std::size_t len = std::max(ours.coefficients().size(), printed.coefficients().size());
  for (std::size_t i = from; i < len; ++i)
    d = std::max(d, std::fabs(Rational(ours.coefficient(i) - printed.coefficient(i)).get_d()));
  return d;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  // Set when the only failing checks are ones that no correct program can
  // pass because the published value is itself inconsistent.
  bool published_defect = false;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(3) << v;
  return s.str();
}

// Rows of the Kronecker stretching table: odd and even constituents and the
// printed rational function.
struct KronRow {
  Partition lambda, mu, pi;
  std::vector<std::string> odd, even, num, den;
};

Outcome kronecker_table() {
  const std::vector<KronRow> rows = {
      {{87, 62}, {97, 52}, {64, 39, 24, 22}, {"1/2", "4", "11/2"}, {"1", "4", "11/2"}, {"1", "8", "11", "2"},
       {"1", "-2", "0", "2", "-1"}},
      {{80, 63}, {111, 32}, {88, 38, 10, 7}, {"1"}, {"1"}, {"1", "1"}, {"1", "-1"}},
      {{108, 56}, {113, 51}, {73, 50, 29, 12}, {"1", "4", "4"}, {"1", "4", "4"}, {"1", "7", "7", "1"},
       {"1", "-3", "3", "-1"}},
  };
  constexpr std::size_t kTerms = 12;
  Outcome out;
  bool constituents_ok = true, series_ok = true, reduced_ok = true;
  for (const KronRow& row : rows) {
    multiplicity::StretchSpec spec;
    spec.kind = multiplicity::StretchKind::Kronecker2Row;
    spec.labels = {row.lambda, row.mu, row.pi};
    spec.horizon = 6;
    const auto r = multiplicity::stretching_quasipolynomial(spec);
    const bool odd = r.quasi_polynomial.constituent_for(1) == poly(row.odd);
    const bool even = r.quasi_polynomial.constituent_for(2) == poly(row.even);
    const auto printed = exact::series_coefficients(poly(row.num), poly(row.den), kTerms - 1);
    const auto reduced = exact::series_coefficients(poly(row.num), poly(row.den) * RationalPolynomial{1, 1}, kTerms - 1);
    bool series = false, series_reduced = false;
    if (r.positive_form) {
      const auto ours = exact::series_coefficients(r.positive_form->numerator_polynomial(),
                                                   r.positive_form->denominator_polynomial(), kTerms - 1);
      series = ours == printed;
      series_reduced = ours == reduced;
    }
    constituents_ok = constituents_ok && odd && even;
    series_ok = series_ok && series;
    reduced_ok = reduced_ok && (series || series_reduced);
    std::ostringstream note;
    note << "(" << row.lambda.to_string() << "),(" << row.mu.to_string() << "),(" << row.pi.to_string()
         << "): odd " << (odd ? "exact" : "DIFFERS") << ", even " << (even ? "exact" : "DIFFERS") << ", series "
         << (series ? "matches" : series_reduced ? "matches only after dividing the printed F by (1+t)" : "DIFFERS");
    out.notes.push_back(note.str());
  }
  out.pass = constituents_ok && series_ok;
  out.published_defect = !out.pass && constituents_ok && reduced_ok;
  if (out.published_defect) {
    out.notes.push_back(
        "the printed F for f = 1 is (1+t)/(1-t) = 1 + 2t + 2t^2 + ..., which no series of the samples 1, 1, 1, ... can "
        "match");
  }
  return out;
}

Outcome gp_hilbert() {
  struct Row {
    std::size_t k;
    Partition lambda;
    std::vector<std::string> coeffs;
    std::string leading;
  };
  const std::vector<Row> rows = {
      {3, {21, 19}, {"1", "4329327034365/137438953472", "35527969472513/137438953472", "399"}, "399"},
      {3, {12, 9, 5}, {"1", "11544872091645/1099511627776", "40132174413825/1099511627776", "42"}, "42"},
  };
  Outcome out;
  for (const Row& row : rows) {
    const RationalPolynomial ours = combinat::weyl_dim_poly(row.k, row.lambda);
    const RationalPolynomial printed = poly(row.coeffs);
    const bool leading = ours.degree() == printed.degree() && ours.leading() == exact::parse_rational(row.leading);
    const double dev = max_deviation(ours, printed);
    out.pass = out.pass && leading && dev <= 1e-6;
    out.notes.push_back("k=" + std::to_string(row.k) + " (" + row.lambda.to_string() + "): leading " +
                        exact::to_string(ours.leading()) + (leading ? " exact" : " WRONG") +
                        ", max deviation " + fmt(dev));
  }
  return out;
}

Outcome syminv() {
  Outcome out;
  const quasipoly::QuasiPolynomial f2 = multiplicity::syminv_hilbert(2, 60);
  const bool k2 = f2.period() == 2 && f2.constituent(1) == poly({"1/2", "1/2"}) && f2.constituent(2) == poly({"1", "1/2"});
  out.notes.push_back(std::string("k=2 constituents ") + (k2 ? "exact" : "DIFFER"));
  const quasipoly::QuasiPolynomial f3 = multiplicity::syminv_hilbert(3, 60);
  const std::vector<std::string> printed_constants = {"5/12", "2/3", "3/4", "46912496118443/70368744177664",
                                                      "58640620148053/140737488355328", "1"};
  const std::vector<std::string> pattern = {"5/12", "2/3", "3/4", "2/3", "5/12", "1"};
  bool k3 = f3.period() == 6;
  double dev = 0;
  for (std::size_t j = 1; k3 && j <= 6; ++j) {
    const RationalPolynomial printed = poly({printed_constants[j - 1], "1/2", "1/12"});
    dev = std::max(dev, max_deviation(f3.constituent(j), printed));
    k3 = k3 && f3.constituent(j).coefficient(0) == exact::parse_rational(pattern[j - 1]);
  }
  k3 = k3 && dev <= 1e-10;
  out.notes.push_back(std::string("k=3 constant terms ") + (k3 ? "5/12, 2/3, 3/4, 2/3, 5/12, 1" : "DIFFER") +
                      ", max deviation from printed floats " + fmt(dev));
  bool samples = true;
  for (std::size_t k : {2, 3})
    for (long n = 1; n <= 60; ++n) {
      const Rational brute(static_cast<long>(combinat::partitions(n, static_cast<long>(k)).size()));
      samples = samples && (k == 2 ? f2 : f3)(n) == brute;
    }
  out.notes.push_back(std::string("partition counts to n=60 ") + (samples ? "confirmed" : "DIFFER"));
  out.pass = k2 && k3 && samples;
  return out;
}

Outcome index_oracle() {
  std::mt19937 rng(4242);
  int agree = 0, identity_ok = 0, empty = 0, nontrivial = 0;
  constexpr int kPolytopes = 200;
  for (int trial = 0; trial < kPolytopes; ++trial) {
    const polytope::HPolytope p = testing_support::random_polytope(rng);
    const std::vector<Integer> samples = ip::ehrhart_samples(p, 24);
    const Integer index = ip::ehrhart_index(p);
    if (index == testing_support::brute_force_index(samples)) ++agree;
    if (index == 0) {
      ++empty;
      identity_ok += std::all_of(samples.begin(), samples.end(), [](const Integer& s) { return s == 0; });
      continue;
    }
    if (index > 1) ++nontrivial;
    const long c = exact::to_int64(index);
    const polytope::HPolytope scaled = polytope::dilate(p, index);
    bool ok = true;
    for (long n = 1; n <= 24 && ok; ++n) {
      const Integer& f = samples[static_cast<std::size_t>(n - 1)];
      ok = n % c != 0 ? f == 0 : f == polytope::count_lattice_points(polytope::dilate(scaled, n / c));
    }
    identity_ok += ok;
  }
  Outcome out;
  out.pass = agree == kPolytopes && identity_ok == kPolytopes;
  out.notes.push_back("index agrees on " + std::to_string(agree) + "/200, F_P(t) = F_cP(t^c) on " +
                      std::to_string(identity_ok) + "/200 (" + std::to_string(empty) + " empty, " +
                      std::to_string(nontrivial) + " with index > 1)");
  return out;
}

Partition pick(const std::vector<Partition>& ps, std::mt19937& rng) { return ps[rng() % ps.size()]; }

Outcome lr_end_to_end() {
  Outcome out;
  std::mt19937 rng(505);
  int hive_agree = 0, hive_nonzero = 0;
  for (int t = 0; t < 200; ++t) {
    const long total = 2 + static_cast<long>(rng() % 9);
    const long a = 1 + static_cast<long>(rng() % static_cast<unsigned long>(total - 1));
    const Partition alpha = pick(combinat::partitions(a), rng), beta = pick(combinat::partitions(total - a), rng);
    std::vector<Partition> candidates;
    for (const Partition& l : combinat::partitions(total))
      if (rng() % 2 == 0 || (l.contains(alpha) && l.contains(beta))) candidates.push_back(l);
    const Partition lambda = pick(candidates, rng);
    const std::size_t n = std::max({alpha.height(), beta.height(), lambda.height(), std::size_t{1}});
    const Integer c = combinat::lr_coefficient(alpha, beta, lambda);
    hive_agree += polytope::count_lattice_points(combinat::hive_polytope(alpha, beta, lambda, n)) == c;
    hive_nonzero += c > 0;
  }
  int lp_agree = 0, lp_nonzero = 0;
  for (int t = 0; t < 200; ++t) {
    const long total = 2 + static_cast<long>(rng() % 11);
    const long a = 1 + static_cast<long>(rng() % static_cast<unsigned long>(total - 1));
    const Partition alpha = pick(combinat::partitions(a), rng), beta = pick(combinat::partitions(total - a), rng);
    std::vector<Partition> candidates;
    for (const Partition& l : combinat::partitions(total))
      if (rng() % 2 == 0 || (l.contains(alpha) && l.contains(beta))) candidates.push_back(l);
    const Partition lambda = pick(candidates, rng);
    const bool positive = combinat::lr_coefficient(alpha, beta, lambda) > 0;
    lp_agree += ip::lr_nonvanishing(alpha, beta, lambda) == positive;
    lp_nonzero += positive;
  }
  out.pass = hive_agree == 200 && lp_agree == 200;
  out.notes.push_back("hive count = LR rule on " + std::to_string(hive_agree) + "/200 triples of size <= 10 (" +
                      std::to_string(hive_nonzero) + " nonzero)");
  out.notes.push_back("LP nonvanishing = (LR > 0) on " + std::to_string(lp_agree) + "/200 triples of size <= 12 (" +
                      std::to_string(lp_nonzero) + " nonzero)");
  return out;
}

// All length-k sequences of nonnegative integers summing to n.
void compositions(long n, std::size_t k, std::vector<long>& cur, const std::function<void()>& visit) {
  if (cur.size() + 1 == k) {
    cur.push_back(n);
    visit();
    cur.pop_back();
    return;
  }
  for (long v = 0; v <= n; ++v) {
    cur.push_back(v);
    compositions(n - v, k, cur, visit);
    cur.pop_back();
  }
}

Outcome multi_algorithm() {
  Outcome out;
  long kron = 0, kron_bad = 0;
  for (long m = 0; m <= 8; ++m)
    for (const auto& lambda : combinat::partitions(m, 2))
      for (const auto& mu : combinat::partitions(m, 2))
        for (const auto& pi : combinat::partitions(m, 4)) {
          const Integer g = multiplicity::kronecker_char(lambda, mu, pi);
          ++kron;
          kron_bad += multiplicity::kronecker_two_row(lambda, mu, pi) != g ||
                      multiplicity::klimyk_branching(4, {2, 2}, pi, lambda, mu) != g;
        }
  out.notes.push_back("Kronecker char/two-row/Klimyk: " + std::to_string(kron - kron_bad) + "/" +
                      std::to_string(kron) + " triples agree");

  long pl = 0, pl_bad = 0;
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; a * b <= 12; ++b)
      for (const auto& lambda : combinat::partitions(a))
        for (const auto& mu : combinat::partitions(b)) {
          ++pl;
          pl_bad += !(multiplicity::plethysm_p_basis(lambda, mu) == multiplicity::plethysm_weyl_substitution(lambda, mu));
        }
  out.notes.push_back("plethysm power-sum/substitution: " + std::to_string(pl - pl_bad) + "/" + std::to_string(pl) +
                      " pairs agree");

  long ch = 0, ch_bad = 0;
  for (long m = 0; m <= 8; ++m)
    for (const auto& lambda : combinat::partitions(m))
      for (const auto& rho : combinat::partitions(m)) {
        ++ch;
        ch_bad += combinat::sn_character(lambda, rho) != combinat::frobenius_character(lambda, rho);
      }
  out.notes.push_back("Murnaghan-Nakayama/Frobenius: " + std::to_string(ch - ch_bad) + "/" + std::to_string(ch) +
                      " characters agree");

  long ko = 0, ko_bad = 0;
  for (long n = 0; n <= 10; ++n)
    for (const auto& lambda : combinat::partitions(n)) {
      for (const auto& content : combinat::partitions(n)) {
        ++ko;
        ko_bad += combinat::kostka(lambda, content.parts()) != testing_support::gt_pattern_count(lambda, content.parts());
      }
      if (lambda.height() > 4) continue;
      std::vector<long> cur;
      compositions(n, 4, cur, [&] {
        ++ko;
        const Integer dp = combinat::kostka(lambda, cur);
        ko_bad += dp != combinat::kostka_bounded_height(lambda, cur) || dp != testing_support::gt_pattern_count(lambda, cur);
      });
    }
  out.notes.push_back("Kostka DP/GT patterns: " + std::to_string(ko - ko_bad) + "/" + std::to_string(ko) +
                      " pairs agree");
  out.pass = kron_bad == 0 && pl_bad == 0 && ch_bad == 0 && ko_bad == 0;
  return out;
}

}  // namespace

int main() {
  bool earlier_suites_pass = true;
  const std::vector<Criterion> criteria = {
      {1, "Kronecker table rows reproduced by stretch with N=6", 600, kronecker_table},
      {2, "G/P Hilbert polynomials for k=3", 1, gp_hilbert},
      {3, "symmetric-invariant Hilbert quasi-polynomials", 5, syminv},
      {4, "index algorithm against brute force and the dilation identity", 120, index_oracle},
      {5, "LR coefficients end to end", 120, lr_end_to_end},
      {6, "multi-algorithm agreement", 300, multi_algorithm},
      {7, "excluded results", 0,
       [&] {
         Outcome out;
         out.pass = earlier_suites_pass;
         out.notes.push_back(
             "not reproduced: type B/C/D LR tables, PSPACE-scale plethysm, Schubert-variety Hilbert polynomials, "
             "density claims; covered by the property suites of criteria 4-6 (" +
             std::string(earlier_suites_pass ? "passed" : "FAILED") + ")");
         return out;
       }},
  };
  int unexpected = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.pass = false;
      out.notes.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || seconds <= c.limit_seconds;
    const bool pass = out.pass && in_time;
    if (c.number >= 4 && c.number <= 6) earlier_suites_pass = earlier_suites_pass && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << fmt(seconds)
              << " s";
    if (c.limit_seconds > 0) std::cout << ", limit " << c.limit_seconds << " s";
    std::cout << "]\n";
    for (const auto& note : out.notes) std::cout << "    " << note << '\n';
    if (!pass && out.published_defect && in_time) {
      std::cout << "    failure is in the published table, not in the computation\n";
    } else if (!pass) {
      ++unexpected;
    }
  }
  return unexpected == 0 ? 0 : 1;
}
