#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "satip/combinat/characters.hpp"
#include "satip/combinat/partition.hpp"
#include "satip/error.hpp"
#include "satip/multiplicity/multiplicity.hpp"

using namespace satip;
using namespace satip::multiplicity;
using combinat::partitions;
using exact::make_rational;
using exact::Rational;
using exact::RationalPolynomial;

namespace {

using Monomial = std::vector<long>;
using Poly = std::map<Monomial, Integer>;

// Contents of every SSYT of `shape` with entries in 1..k, by brute force.
std::vector<Monomial> ssyt_contents(const Partition& shape, std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < shape.height(); ++r)
    for (long c = 0; c < shape[r]; ++c) cells.emplace_back(r, static_cast<std::size_t>(c));
  std::vector<std::vector<long>> t(shape.height());
  for (std::size_t r = 0; r < shape.height(); ++r) t[r].assign(static_cast<std::size_t>(shape[r]), 0);
  std::vector<Monomial> out;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      Monomial m(k, 0);
      for (const auto& row : t)
        for (long e : row) ++m[static_cast<std::size_t>(e - 1)];
      out.push_back(m);
      return;
    }
    const auto [r, c] = cells[idx];
    for (long e = 1; e <= static_cast<long>(k); ++e) {
      if (c > 0 && e < t[r][c - 1]) continue;
      if (r > 0 && e <= t[r - 1][c]) continue;
      t[r][c] = e;
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

// s_lambda[s_mu] in k variables: substitute the monomials of s_mu for the
// variables of s_lambda, then peel off Schur polynomials from the top.
SchurExpansion brute_plethysm(const Partition& lambda, const Partition& mu, std::size_t k) {
  const std::vector<Monomial> inner = ssyt_contents(mu, k);
  Poly poly;
  for (const Monomial& outer : ssyt_contents(lambda, inner.size())) {
    Monomial m(k, 0);
    for (std::size_t i = 0; i < inner.size(); ++i)
      for (std::size_t j = 0; j < k; ++j) m[j] += outer[i] * inner[i][j];
    poly[m] += 1;
  }
  SchurExpansion out;
  while (true) {
    while (!poly.empty() && poly.rbegin()->second == 0) poly.erase(std::prev(poly.end()));
    if (poly.empty()) break;
    const auto [lead, c] = *poly.rbegin();
    const Partition pi(lead);
    out.add(pi, c);
    for (const Monomial& m : ssyt_contents(pi, k)) poly[m] -= c;
  }
  return out;
}

std::vector<Partition> partitions_up_to_height(long n, long h) { return partitions(n, h); }

}  // namespace

TEST(SchurExpansion, DropsZeroCoefficients) {
  SchurExpansion e;
  e.add({2, 1}, 3);
  e.add({2, 1}, -3);
  e.add({3}, 0);
  EXPECT_TRUE(e.terms().empty());
  e.add({1}, 2);
  EXPECT_EQ(e.coefficient({1}), 2);
  EXPECT_EQ(e.coefficient({2}), 0);
}

TEST(KroneckerChar, Examples) {
  EXPECT_EQ(kronecker_char({1, 1}, {1, 1}, {2}), 1);
  EXPECT_EQ(kronecker_char({2, 1}, {2, 1}, {2, 1}), 1);
  EXPECT_EQ(kronecker_char({2, 1}, {2, 1}, {1, 1, 1}), 1);
  EXPECT_EQ(kronecker_char({2, 1}, {2, 1}, {3}), 1);
  EXPECT_EQ(kronecker_char({3}, {2, 1}, {3}), 0);
}

TEST(KroneckerChar, Errors) {
  try {
    kronecker_char({2}, {1}, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeMismatch);
  }
  try {
    kronecker_char({11}, {11}, {11});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeGuardExceeded);
  }
  EXPECT_EQ(kronecker_char({11}, {11}, {11}, 11), 1);
}

TEST(KroneckerTwoRow, TableValues) {
  EXPECT_EQ(kronecker_two_row({87, 62}, {97, 52}, {64, 39, 24, 22}), 10);
  EXPECT_EQ(kronecker_two_row({80, 63}, {111, 32}, {88, 38, 10, 7}), 1);
}

TEST(KroneckerTwoRow, Errors) {
  try {
    kronecker_two_row({1, 1, 1}, {3}, {3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HeightViolation);
  }
  try {
    kronecker_two_row({5}, {5}, {1, 1, 1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HeightViolation);
  }
  try {
    kronecker_two_row({2}, {3}, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeMismatch);
  }
}

TEST(KroneckerTwoRow, AgreesWithCharactersUpToNine) {
  for (long m = 0; m <= 9; ++m)
    for (const auto& lambda : partitions_up_to_height(m, 2))
      for (const auto& mu : partitions_up_to_height(m, 2))
        for (const auto& pi : partitions_up_to_height(m, 4)) {
          EXPECT_EQ(kronecker_two_row(lambda, mu, pi), kronecker_char(lambda, mu, pi))
              << lambda.to_string() << " " << mu.to_string() << " " << pi.to_string();
        }
}

TEST(Klimyk, Examples) {
  EXPECT_EQ(klimyk_branching(4, {2, 2}, {1}, {1}, {1}), 1);
  EXPECT_EQ(klimyk_branching(4, {2, 2}, {1, 1}, {2}, {1, 1}), 1);
  EXPECT_EQ(klimyk_branching(4, {2, 2}, {1, 1}, {1, 1}, {2}), 1);
  EXPECT_EQ(klimyk_branching(4, {2, 2}, {1, 1}, {2}, {2}), 0);
  // Sym^2(C^2 (x) C^3) = Sym^2 (x) Sym^2 + Lambda^2 (x) Lambda^2.
  EXPECT_EQ(klimyk_branching(6, {2, 3}, {2}, {2}, {2}), 1);
  EXPECT_EQ(klimyk_branching(6, {2, 3}, {2}, {1, 1}, {1, 1}), 1);
  EXPECT_EQ(klimyk_branching(6, {2, 3}, {2}, {2}, {1, 1}), 0);
}

TEST(Klimyk, UnsupportedEmbedding) {
  try {
    klimyk_branching(5, {2, 2}, {1}, {1}, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedEmbedding);
  }
}

TEST(Kronecker, ThreeWayAgreementUpToEight) {
  for (long m = 0; m <= 8; ++m)
    for (const auto& lambda : partitions_up_to_height(m, 2))
      for (const auto& mu : partitions_up_to_height(m, 2))
        for (const auto& pi : partitions_up_to_height(m, 4)) {
          const Integer g = kronecker_char(lambda, mu, pi);
          EXPECT_EQ(kronecker_two_row(lambda, mu, pi), g);
          EXPECT_EQ(klimyk_branching(4, {2, 2}, pi, lambda, mu), g)
              << lambda.to_string() << " " << mu.to_string() << " " << pi.to_string();
        }
}

TEST(Kronecker, DimensionIdentityAndSymmetry) {
  for (long m = 1; m <= 7; ++m) {
    const auto all = partitions(m);
    const CycleType identity(std::vector<long>(static_cast<std::size_t>(m), 1));
    for (const auto& lambda : all)
      for (const auto& mu : all) {
        Integer total = 0;
        for (const auto& pi : all) {
          const Integer g = kronecker_char(lambda, mu, pi);
          EXPECT_GE(g, 0);
          EXPECT_EQ(g, kronecker_char(mu, lambda, pi));
          total += g * combinat::sn_character(pi, identity);
        }
        EXPECT_EQ(total, combinat::sn_character(lambda, identity) * combinat::sn_character(mu, identity));
      }
  }
}

TEST(Plethysm, Examples) {
  SchurExpansion s2s2;
  s2s2.add({4}, 1);
  s2s2.add({2, 2}, 1);
  EXPECT_EQ(plethysm_p_basis({2}, {2}), s2s2);
  EXPECT_EQ(plethysm_weyl_substitution({2}, {2}), s2s2);
  EXPECT_EQ(plethysm_weyl_substitution({2}, {2}).coefficient({3, 1}), 0);
  EXPECT_EQ(brute_plethysm({2}, {2}, 4), s2s2);

  SchurExpansion s2s11;
  s2s11.add({1, 1, 1, 1}, 1);
  s2s11.add({2, 2}, 1);
  EXPECT_EQ(plethysm_p_basis({2}, {1, 1}), s2s11);
  EXPECT_EQ(brute_plethysm({2}, {1, 1}, 4), s2s11);

  for (const Partition& mu : {Partition{1}, Partition{2, 1}, Partition{3, 1, 1}}) {
    SchurExpansion id;
    id.add(mu, 1);
    EXPECT_EQ(plethysm_p_basis({1}, mu), id);
    EXPECT_EQ(plethysm_weyl_substitution({1}, mu), id);
  }
}

TEST(Plethysm, AgainstBruteForce) {
  for (const auto& [lambda, mu] : std::vector<std::pair<Partition, Partition>>{
           {{3}, {2}}, {{2, 1}, {2}}, {{1, 1, 1}, {2}}, {{2}, {2, 1}}, {{2}, {3}}, {{1, 1}, {2, 1}}}) {
    const std::size_t k = static_cast<std::size_t>(lambda.size()) * mu.height();
    EXPECT_EQ(plethysm_p_basis(lambda, mu), brute_plethysm(lambda, mu, k))
        << lambda.to_string() << " " << mu.to_string();
  }
}

TEST(Plethysm, GuardAndEmptyInputs) {
  try {
    plethysm_p_basis({3}, {3, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeGuardExceeded);
  }
  try {
    plethysm_weyl_substitution({3}, {3, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeGuardExceeded);
  }
  SchurExpansion one;
  one.add({}, 1);
  EXPECT_EQ(plethysm_p_basis({}, {2}), one);
  EXPECT_EQ(plethysm_weyl_substitution({}, {2}), one);
}

TEST(Plethysm, TwoAlgorithmsAgreeUpToTwelve) {
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; a * b <= 12; ++b)
      for (const auto& lambda : partitions(a))
        for (const auto& mu : partitions(b)) {
          EXPECT_EQ(plethysm_p_basis(lambda, mu), plethysm_weyl_substitution(lambda, mu))
              << lambda.to_string() << " " << mu.to_string();
        }
}

TEST(Plethysm, DimensionCheck) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (long a = 1; a <= 9; ++a)
      for (long b = 1; a * b <= 9; ++b)
        for (const auto& lambda : partitions(a))
          for (const auto& mu : partitions(b)) {
            const Integer d = combinat::weyl_dimension(k, mu);
            Integer total = 0;
            const SchurExpansion expansion = plethysm_p_basis(lambda, mu);
            for (const auto& [pi, c] : expansion.terms()) {
              EXPECT_GT(c, 0);
              total += c * combinat::weyl_dimension(k, pi);
            }
            const Integer expected =
                d == 0 ? Integer(lambda.empty() ? 1 : 0) : combinat::weyl_dimension(exact::to_int64(d), lambda);
            EXPECT_EQ(total, expected) << k << " " << lambda.to_string() << " " << mu.to_string();
          }
}

TEST(SymInv, PartitionCountsMatchBruteForce) {
  for (long k = 1; k <= 5; ++k)
    for (long n = 0; n <= 40; ++n)
      EXPECT_EQ(partitions_into_at_most(n, k), static_cast<long>(partitions(n, k).size()));
}

TEST(SymInv, Examples) {
  const auto k1 = syminv_hilbert(1, 5);
  EXPECT_EQ(k1, quasipoly::QuasiPolynomial::polynomial(RationalPolynomial::constant(1)));

  const auto k2 = syminv_hilbert(2, 12);
  ASSERT_EQ(k2.period(), 2u);
  EXPECT_EQ(k2.constituent(1), (RationalPolynomial{make_rational(1, 2), make_rational(1, 2)}));
  EXPECT_EQ(k2.constituent(2), (RationalPolynomial{Rational(1), make_rational(1, 2)}));

  const auto k3 = syminv_hilbert(3, 60);
  ASSERT_EQ(k3.period(), 6u);
  const std::vector<Rational> constants{make_rational(5, 12), make_rational(2, 3), make_rational(3, 4),
                                        make_rational(2, 3), make_rational(5, 12), Rational(1)};
  for (std::size_t j = 1; j <= 6; ++j) {
    EXPECT_EQ(k3.constituent(j), (RationalPolynomial{constants[j - 1], make_rational(1, 2), make_rational(1, 12)}));
  }
  for (long n = 1; n <= 60; ++n) EXPECT_EQ(k3(n), Rational(static_cast<long>(partitions(n, 3).size())));
}

TEST(SymInv, InsufficientHorizon) {
  try {
    syminv_hilbert(3, 17);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientHorizon);
  }
}

TEST(Stretch, KroneckerFirstRow) {
  StretchSpec spec;
  spec.kind = StretchKind::Kronecker2Row;
  spec.labels = {{87, 62}, {97, 52}, {64, 39, 24, 22}};
  spec.horizon = 6;
  spec.threads = 3;
  const StretchResult r = stretching_quasipolynomial(spec);
  EXPECT_EQ(r.samples.front(), 10);
  ASSERT_EQ(r.quasi_polynomial.period(), 2u);
  EXPECT_EQ(r.quasi_polynomial.constituent(1), (RationalPolynomial{make_rational(1, 2), 4, make_rational(11, 2)}));
  EXPECT_EQ(r.quasi_polynomial.constituent(2), (RationalPolynomial{1, 4, make_rational(11, 2)}));
  ASSERT_TRUE(r.positive_form);
  EXPECT_EQ(r.positive_form->h, (std::vector<Integer>{1, 8, 11, 2}));
  EXPECT_EQ(r.positive_form->denominator,
            (std::vector<quasipoly::DenominatorFactor>{{1, 2}, {2, 1}}));
  EXPECT_EQ(r.index, 1u);
  EXPECT_EQ(r.saturation_index, 0u);
  EXPECT_EQ(r.positivity_index, 0u);
}

TEST(Stretch, ConstantKroneckerRow) {
  StretchSpec spec;
  spec.kind = StretchKind::Kronecker2Row;
  spec.labels = {{80, 63}, {111, 32}, {88, 38, 10, 7}};
  const StretchResult r = stretching_quasipolynomial(spec);
  EXPECT_EQ(r.quasi_polynomial, quasipoly::QuasiPolynomial::polynomial(RationalPolynomial::constant(1)));
  const exact::RationalFunction printed(RationalPolynomial{1, 1}, RationalPolynomial{1, -1});
  // The canonical form is 1/(1-t); (1+t)/(1-t) is a different series.
  EXPECT_EQ(r.generating_function,
            exact::RationalFunction(RationalPolynomial::constant(1), RationalPolynomial{1, -1}));
  EXPECT_NE(r.generating_function, printed);
}

TEST(Stretch, LittlewoodRichardsonTrivial) {
  StretchSpec spec;
  spec.kind = StretchKind::LR;
  spec.labels = {{1}, {1}, {2}};
  const StretchResult r = stretching_quasipolynomial(spec);
  EXPECT_EQ(r.quasi_polynomial, quasipoly::QuasiPolynomial::polynomial(RationalPolynomial::constant(1)));
  EXPECT_EQ(r.generating_function,
            exact::RationalFunction(RationalPolynomial::constant(1), RationalPolynomial{1, -1}));
}

TEST(Stretch, FitReproducesSamplesAndIndexDivides) {
  std::vector<StretchSpec> specs;
  {
    StretchSpec s;
    s.kind = StretchKind::LR;
    s.labels = {{2, 1}, {2, 1}, {3, 2, 1}};
    s.horizon = 8;
    s.degree_bound = 3;
    specs.push_back(s);
  }
  {
    StretchSpec s;
    s.kind = StretchKind::SymInv;
    s.k = 3;
    s.horizon = 24;
    s.period_bound = 6;
    specs.push_back(s);
  }
  {
    StretchSpec s;
    s.kind = StretchKind::GpHilbert;
    s.k = 3;
    s.labels = {{2, 1}};
    s.horizon = 8;
    s.degree_bound = 3;
    specs.push_back(s);
  }
  {
    StretchSpec s;
    s.kind = StretchKind::Plethysm;
    s.labels = {{1}, {2}, {2}};
    s.horizon = 4;
    specs.push_back(s);
  }
  {
    StretchSpec s;
    s.kind = StretchKind::Kronecker2Row;
    s.labels = {{3, 1}, {2, 2}, {2, 1, 1}};
    s.horizon = 8;
    s.threads = 2;
    specs.push_back(s);
  }
  for (const StretchSpec& s : specs) {
    const StretchResult r = stretching_quasipolynomial(s);
    for (long n = 1; n <= s.horizon; ++n) {
      const Integer& v = r.samples[static_cast<std::size_t>(n - 1)];
      EXPECT_EQ(r.quasi_polynomial(n), Rational(v)) << stretch_kind_name(s.kind) << " n=" << n;
      EXPECT_EQ(v, stretch_value(s, n));
      if (v != 0) {
        ASSERT_NE(r.index, 0u);
        EXPECT_EQ(n % static_cast<long>(r.index), 0);
      }
    }
  }
}

TEST(Stretch, GpHilbertMatchesWeylPolynomial) {
  StretchSpec s;
  s.kind = StretchKind::GpHilbert;
  s.k = 3;
  s.labels = {{21, 19}};
  s.horizon = 8;
  s.degree_bound = 3;
  const StretchResult r = stretching_quasipolynomial(s);
  EXPECT_EQ(r.quasi_polynomial, quasipoly::QuasiPolynomial::polynomial(combinat::weyl_dim_poly(3, {21, 19})));
}

TEST(Stretch, PlethysmValuesMatchPowerSumRoute) {
  StretchSpec s;
  s.kind = StretchKind::Plethysm;
  s.guard = 24;
  const std::vector<std::vector<Partition>> cases = {
      {{2}, {2}, {4}}, {{2}, {2}, {2, 2}}, {{1, 1}, {2}, {3, 1}}, {{2}, {1, 1}, {1, 1, 1, 1}}, {{1}, {2, 1}, {2, 1}}};
  for (const auto& labels : cases) {
    s.labels = labels;
    for (long n = 1; n * labels[0].size() * labels[1].size() <= 12; ++n) {
      EXPECT_EQ(stretch_value(s, n), plethysm_p_basis(labels[0].scaled(n), labels[1]).coefficient(labels[2].scaled(n)))
          << labels[0].to_string() << " " << labels[1].to_string() << " " << labels[2].to_string() << " n=" << n;
    }
  }
  s.labels = {{2}, {2}, {4}};
  s.guard = 8;
  EXPECT_THROW(stretch_value(s, 3), Error);
}

TEST(Stretch, Errors) {
  StretchSpec s;
  s.kind = StretchKind::LR;
  s.labels = {{1}, {1}};
  try {
    stretching_quasipolynomial(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  s.kind = StretchKind::SymInv;
  s.labels = {};
  s.k = 3;
  s.horizon = 12;
  s.period_bound = 2;
  try {
    stretching_quasipolynomial(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentSamples);
  }
}
