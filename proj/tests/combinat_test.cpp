#include <gtest/gtest.h>

#include <random>

#include "satip/combinat/characters.hpp"
#include "satip/combinat/partition.hpp"
#include "satip/combinat/tableaux.hpp"
#include "satip/error.hpp"

using namespace satip;
using namespace satip::combinat;
using exact::make_rational;
using exact::Rational;

namespace {

// All length-k sequences of nonnegative integers summing to n.
std::vector<std::vector<long>> compositions(long n, std::size_t k) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(k, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == k) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (k == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  rec(0, n);
  return out;
}

// Brute-force SSYT enumeration for small shapes.
long brute_kostka(const Partition& lambda, const std::vector<long>& content) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < lambda.height(); ++i)
    for (long c = 0; c < lambda[i]; ++c) cells.emplace_back(i, static_cast<std::size_t>(c));
  std::vector<std::vector<long>> t(lambda.height());
  for (std::size_t i = 0; i < lambda.height(); ++i) t[i].assign(static_cast<std::size_t>(lambda[i]), 0);
  std::vector<long> used(content.size() + 1, 0);
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [i, c] = cells[k];
    for (long v = 1; v <= static_cast<long>(content.size()); ++v) {
      if (used[v] == content[v - 1]) continue;
      if (c > 0 && t[i][c - 1] > v) continue;
      if (i > 0 && t[i - 1][c] >= v) continue;
      t[i][c] = v;
      ++used[v];
      rec(k + 1);
      --used[v];
    }
  };
  rec(0);
  return count;
}

bool horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (std::size_t i = 0; i + 1 < outer.height(); ++i)
    if (inner[i] < outer[i + 1]) return false;
  return true;
}

long count_hive_points(const Partition& a, const Partition& b, const Partition& l) {
  const std::size_t n = std::max({a.height(), b.height(), l.height(), std::size_t{1}});
  return count_lattice_points(hive_polytope(a, b, l, n)).get_si();
}

}  // namespace

TEST(Partition, ConstructionAndParsing) {
  EXPECT_EQ(Partition::parse("87,62"), Partition({87, 62}));
  EXPECT_EQ(Partition::parse(" 3, 1 ,0"), Partition({3, 1}));
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_THROW(Partition::parse("1,2"), Error);
  EXPECT_THROW(Partition::parse("3,x"), Error);
  EXPECT_THROW(Partition({2, -1}), Error);
  EXPECT_EQ(Partition({4, 2, 1}).conjugate(), Partition({3, 2, 1, 1}));
  EXPECT_EQ(Partition({4, 2, 1}).size(), 7);
  EXPECT_EQ(Partition({2, 1}).scaled(3), Partition({6, 3}));
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(4).front(), Partition({4}));
  EXPECT_EQ(partitions(10, 3).size(), 14u);
  EXPECT_EQ(centralizer_size(Partition({2, 1, 1})), 4);
}

TEST(Kostka, Examples) {
  EXPECT_EQ(kostka({3, 1}, {3, 1}), 1);
  EXPECT_EQ(kostka({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(kostka({1, 1, 1}, {3}), 0);
  EXPECT_EQ(kostka({2, 1}, {1, 1}), 0);
  EXPECT_EQ(kostka({}, {}), 1);
  EXPECT_EQ(kostka({2, 1}, {0, 2, 0, 1}), 1);
}

TEST(Kostka, MatchesBruteForce) {
  for (long n = 0; n <= 6; ++n)
    for (const Partition& lambda : partitions(n))
      for (const auto& content : compositions(n, 3)) EXPECT_EQ(kostka(lambda, content), brute_kostka(lambda, content));
}

TEST(Kostka, BoundedHeightAgreesExhaustively) {
  for (long n = 0; n <= 10; ++n)
    for (const Partition& lambda : partitions(n, 4))
      for (const auto& content : compositions(n, 4))
        ASSERT_EQ(kostka_bounded_height(lambda, content), kostka(lambda, content))
            << lambda.to_string() << " content " << content[0] << content[1] << content[2] << content[3];
}

TEST(Kostka, BoundedHeightExamples) {
  EXPECT_EQ(kostka_bounded_height({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(kostka_bounded_height({50, 50}, {50, 50}), 1);
  EXPECT_THROW(kostka_bounded_height({1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}), Error);
  // Large parts finish quickly and match the DP where it is still cheap.
  EXPECT_EQ(kostka_bounded_height({40, 30, 20, 10}, {25, 25, 25, 25}), kostka({40, 30, 20, 10}, {25, 25, 25, 25}));
}

TEST(Kostka, SumOverContentsIsWeylDimension) {
  for (long n = 0; n <= 8; ++n)
    for (std::size_t k = 1; k <= 4; ++k)
      for (const Partition& lambda : partitions(n, static_cast<long>(k))) {
        Integer total = 0;
        for (const auto& content : compositions(n, k)) total += kostka(lambda, content);
        EXPECT_EQ(total, weyl_dimension(k, lambda)) << lambda.to_string() << " k=" << k;
      }
}

TEST(Kostka, KostantMultiplicityFormulaAgrees) {
  for (long n = 0; n <= 7; ++n)
    for (const Partition& lambda : partitions(n, 4))
      for (const auto& content : compositions(n, 4))
        EXPECT_EQ(kostant_weight_multiplicity(lambda, content), kostka(lambda, content));
}

TEST(LittlewoodRichardson, Examples) {
  EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}), 2);
  EXPECT_EQ(lr_coefficient({3, 1}, {}, {3, 1}), 1);
  EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {6}), 0);
  EXPECT_EQ(lr_coefficient({1}, {1}, {2}), 1);
  EXPECT_EQ(lr_coefficient({1}, {1}, {1, 1}), 1);
  EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {4, 2}), 1);
}

TEST(LittlewoodRichardson, PieriRule) {
  for (long n = 0; n <= 7; ++n)
    for (const Partition& alpha : partitions(n))
      for (long k = 0; k <= 3; ++k)
        for (const Partition& lambda : partitions(n + k)) {
          const long expected = horizontal_strip(lambda, alpha) ? 1 : 0;
          EXPECT_EQ(lr_coefficient(alpha, Partition({k}), lambda), expected);
        }
}

TEST(LittlewoodRichardson, SymmetricAndDimensionCounting) {
  // dim(V_alpha (x) V_beta) = sum_lambda c * dim V_lambda over GL_3.
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 3; ++b)
      for (const Partition& alpha : partitions(a, 3))
        for (const Partition& beta : partitions(b, 3)) {
          Integer total = 0;
          for (const Partition& lambda : partitions(a + b, 3)) {
            const Integer c = lr_coefficient(alpha, beta, lambda);
            EXPECT_EQ(c, lr_coefficient(beta, alpha, lambda));
            total += c * weyl_dimension(3, lambda);
          }
          EXPECT_EQ(total, weyl_dimension(3, alpha) * weyl_dimension(3, beta));
        }
}

TEST(Hive, Examples) {
  EXPECT_EQ(count_lattice_points(hive_polytope({2, 1}, {2, 1}, {3, 2, 1}, 3)), 2);
  EXPECT_EQ(count_lattice_points(hive_polytope({1}, {1}, {2}, 2)), 1);
  EXPECT_EQ(count_lattice_points(hive_polytope({1}, {1}, {1, 1}, 2)), 1);
  EXPECT_EQ(hive_polytope({2, 1}, {2, 1}, {3, 2, 1}, 3).dim(), 1u);
  EXPECT_THROW(hive_polytope({1, 1, 1}, {}, {1, 1, 1}, 2), Error);
  EXPECT_THROW(hive_polytope({1}, {1}, {3}, 2), Error);
}

TEST(Hive, LatticeCountEqualsLrRule) {
  std::mt19937 rng(101);
  int nonzero = 0;
  for (int t = 0; t < 200; ++t) {
    const long total = 2 + static_cast<long>(rng() % 9);
    const long a = 1 + static_cast<long>(rng() % static_cast<unsigned long>(total - 1));
    const auto pa = partitions(a);
    const auto pb = partitions(total - a);
    const Partition alpha = pa[rng() % pa.size()];
    const Partition beta = pb[rng() % pb.size()];
    // Bias lambda towards the support: pick among partitions that contain alpha.
    std::vector<Partition> candidates;
    for (const Partition& l : partitions(total))
      if (l.contains(alpha) && l.contains(beta)) candidates.push_back(l);
    const Partition lambda = candidates[rng() % candidates.size()];
    const Integer c = lr_coefficient(alpha, beta, lambda);
    EXPECT_EQ(count_hive_points(alpha, beta, lambda), c)
        << alpha.to_string() << " | " << beta.to_string() << " | " << lambda.to_string();
    nonzero += c > 0 ? 1 : 0;
  }
  EXPECT_GT(nonzero, 60);
}

TEST(Characters, Examples) {
  EXPECT_EQ(sn_character({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(sn_character({2, 1}, {3}), -1);
  EXPECT_EQ(sn_character({2, 1}, {2, 1}), 0);
  for (const Partition& rho : partitions(6)) EXPECT_EQ(sn_character({6}, rho), 1);
  EXPECT_EQ(frobenius_character({1, 1}, {2}), -1);
  EXPECT_EQ(frobenius_character({2, 2}, {2, 2}), 2);
  EXPECT_EQ(sn_character({}, {}), 1);
  EXPECT_THROW(sn_character({2}, {1}), Error);
  EXPECT_THROW(frobenius_character({2}, {1}), Error);
}

TEST(Characters, FrobeniusAgreesWithMurnaghanNakayama) {
  for (long m = 0; m <= 8; ++m)
    for (const Partition& lambda : partitions(m))
      for (const Partition& rho : partitions(m)) ASSERT_EQ(frobenius_character(lambda, rho), sn_character(lambda, rho));
}

TEST(Characters, ColumnOrthogonality) {
  for (long m = 1; m <= 7; ++m) {
    const auto ps = partitions(m);
    for (const Partition& rho : ps)
      for (const Partition& sigma : ps) {
        Integer sum = 0;
        for (const Partition& lambda : ps) sum += sn_character(lambda, rho) * sn_character(lambda, sigma);
        EXPECT_EQ(sum, rho == sigma ? centralizer_size(rho) : Integer(0));
      }
  }
}

TEST(Kostant, Examples) {
  EXPECT_EQ(kostant_partition(2, {0, 0}), 1);
  EXPECT_EQ(kostant_partition(2, {1, 1}), 2);
  EXPECT_EQ(kostant_partition(2, {2, 1}), 2);
  EXPECT_EQ(kostant_partition(2, {-1, 1}), 0);
  EXPECT_EQ(kostant_partition(1, {5}), 1);
  // A_3 at alpha_1 + alpha_2 + alpha_3: the 4 compositions of the path.
  EXPECT_EQ(kostant_partition(3, {1, 1, 1}), 4);
  EXPECT_THROW(kostant_partition(2, {1}), Error);
}

TEST(WeylDimension, Examples) {
  const auto p = weyl_dim_poly(3, {1, 1});
  EXPECT_EQ(p, (exact::RationalPolynomial{1, make_rational(3, 2), make_rational(1, 2)}));
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(weyl_dim_poly(3, {21, 19}),
            (exact::RationalPolynomial{1, make_rational(63, 2), make_rational(517, 2), 399}));
  EXPECT_EQ(weyl_dim_poly(2, {1}), (exact::RationalPolynomial{1, 1}));
  EXPECT_EQ(weyl_dim_poly(3, {12, 9, 5}).leading(), 42);
  EXPECT_THROW(weyl_dim_poly(2, {1, 1, 1}), Error);
  for (std::size_t k = 1; k <= 4; ++k)
    for (const Partition& l : partitions(5, static_cast<long>(k)))
      EXPECT_EQ(weyl_dim_poly(k, l)(0), 1);
}
