#include "satip/combinat/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "satip/error.hpp"

namespace satip::combinat {

namespace {

class KostkaCounter {
 public:
  explicit KostkaCounter(const std::vector<long>& content) : content_(content) {}

  Integer count(const std::vector<long>& shape, std::size_t letters) {
    if (shape.empty()) return 1;
    if (letters == 0 || shape.size() > letters) return 0;
    auto key = std::make_pair(shape, letters);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    std::vector<long> inner = shape;
    strips(shape, inner, 0, content_[letters - 1], letters, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  // Removes a horizontal strip of size `left` from shape, choosing the new
  // length of row i and onwards.
  void strips(const std::vector<long>& shape, std::vector<long>& inner, std::size_t i, long left,
              std::size_t letters, Integer& total) {
    if (i == shape.size()) {
      if (left != 0) return;
      std::vector<long> next = inner;
      while (!next.empty() && next.back() == 0) next.pop_back();
      total += count(next, letters - 1);
      return;
    }
    const long floor_len = i + 1 < shape.size() ? shape[i + 1] : 0;
    long capacity = 0;
    for (std::size_t r = i; r < shape.size(); ++r) capacity += shape[r] - (r + 1 < shape.size() ? shape[r + 1] : 0);
    if (capacity < left) return;
    for (long take = 0; take <= std::min(left, shape[i] - floor_len); ++take) {
      inner[i] = shape[i] - take;
      strips(shape, inner, i + 1, left - take, letters, total);
    }
    inner[i] = shape[i];
  }

  std::vector<long> content_;
  std::map<std::pair<std::vector<long>, std::size_t>, Integer> memo_;
};

bool content_matches(long size, const std::vector<long>& content) {
  long total = 0;
  for (long c : content) {
    if (c < 0) return false;
    total += c;
  }
  return total == size;
}

}  // namespace

Integer kostka(const Partition& lambda, const std::vector<long>& content) {
  if (!content_matches(lambda.size(), content)) return 0;
  KostkaCounter counter(content);
  return counter.count(lambda.parts(), content.size());
}

Integer kostka_bounded_height(const Partition& pi, const std::vector<long>& content) {
  if (pi.height() > 4) fail(ErrorCode::HeightViolation, "kostka_bounded_height needs height <= 4");
  if (content.size() > 4) fail(ErrorCode::HeightViolation, "kostka_bounded_height needs at most 4 content entries");
  if (!content_matches(pi.size(), content)) return 0;
  const std::vector<long> p = pi.padded(4);
  std::vector<long> c = content;
  c.resize(4, 0);
  const long s2 = c[0] + c[1];
  const long s3 = s2 + c[2];
  // Rows of the pattern: p (fixed), (a1, a2, a3) with sum s3, (b1, b2) with
  // sum s2, and (c1). Interlacing gives b1 in a closed-form interval.
  std::int64_t total = 0;
  for (long a1 = p[1]; a1 <= p[0]; ++a1) {
    const long a2_lo = std::max(p[2], s3 - a1 - p[2]);
    const long a2_hi = std::min(p[1], s3 - a1 - p[3]);
    for (long a2 = a2_lo; a2 <= a2_hi; ++a2) {
      const long a3 = s3 - a1 - a2;
      const long lo = std::max({a2, s2 - a2, s2 - c[0], c[0]});
      const long hi = std::min(a1, s2 - a3);
      if (hi >= lo) total += hi - lo + 1;
    }
  }
  return Integer(static_cast<long>(total));
}

namespace {

class LrCounter {
 public:
  LrCounter(const Partition& alpha, const Partition& beta, const Partition& lambda)
      : alpha_(alpha.padded(lambda.height())), lambda_(lambda.parts()), beta_(beta.parts()) {
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
      rows_.emplace_back(static_cast<std::size_t>(lambda_[i]), 0);
      for (long c = lambda_[i] - 1; c >= alpha_[i]; --c) cells_.emplace_back(i, static_cast<std::size_t>(c));
    }
    used_.assign(beta_.size() + 1, 0);
  }

  Integer run() {
    total_ = 0;
    fill(0);
    return total_;
  }

 private:
  void fill(std::size_t k) {
    if (k == cells_.size()) {
      ++total_;
      return;
    }
    const auto [i, c] = cells_[k];
    const long right = c + 1 < rows_[i].size() ? rows_[i][c + 1] : static_cast<long>(beta_.size());
    const long above = (i > 0 && static_cast<long>(c) >= alpha_[i - 1]) ? rows_[i - 1][c] : 0;
    for (long letter = above + 1; letter <= right; ++letter) {
      const auto l = static_cast<std::size_t>(letter);
      if (used_[l] == beta_[l - 1]) continue;
      if (l > 1 && used_[l] + 1 > used_[l - 1]) continue;
      ++used_[l];
      rows_[i][c] = letter;
      fill(k + 1);
      --used_[l];
    }
    rows_[i][c] = 0;
  }

  std::vector<long> alpha_, lambda_, beta_;
  std::vector<std::vector<long>> rows_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<long> used_;
  Integer total_;
};

}  // namespace

Integer lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& lambda) {
  if (alpha.size() + beta.size() != lambda.size() || !lambda.contains(alpha)) return 0;
  if (beta.empty()) return 1;
  return LrCounter(alpha, beta, lambda).run();
}

std::size_t hive_variable_index(std::size_t i, std::size_t j) { return (i - 1) * (i - 2) / 2 + (j - 1); }

polytope::HPolytope hive_polytope(const Partition& alpha, const Partition& beta, const Partition& lambda,
                                  std::size_t n) {
  if (alpha.height() > n || beta.height() > n || lambda.height() > n) {
    fail(ErrorCode::DimensionMismatch, "partition height exceeds the hive side " + std::to_string(n));
  }
  if (alpha.size() + beta.size() != lambda.size()) {
    fail(ErrorCode::DimensionMismatch, "hive boundary needs |alpha| + |beta| = |lambda|");
  }
  const std::size_t vars = n >= 2 ? (n - 1) * (n - 2) / 2 : 0;
  polytope::HPolytope hive(vars);
  if (n == 0) return hive;

  std::vector<std::vector<long>> fixed(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fixed[i].assign(i + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    fixed[i][0] = fixed[i - 1][0] + alpha[i - 1];
    fixed[i][i] = fixed[i - 1][i - 1] + lambda[i - 1];
  }
  for (std::size_t j = 1; j <= n; ++j) fixed[n][j] = fixed[n][j - 1] + beta[j - 1];

  auto interior = [n](std::size_t i, std::size_t j) { return j > 0 && j < i && i < n; };
  // obtuse pair (o1, o2), acute pair (a1, a2): a1 + a2 - o1 - o2 <= 0.
  using Vertex = std::pair<std::size_t, std::size_t>;
  auto rhombus = [&](Vertex o1, Vertex o2, Vertex a1, Vertex a2) {
    exact::RationalVector coeffs(vars, exact::Rational(0));
    exact::Rational rhs = 0;
    auto term = [&](Vertex v, long sign) {
      if (interior(v.first, v.second)) {
        coeffs[hive_variable_index(v.first, v.second)] += sign;
      } else {
        rhs -= sign * fixed[v.first][v.second];
      }
    };
    term(a1, 1);
    term(a2, 1);
    term(o1, -1);
    term(o2, -1);
    const bool trivial = std::all_of(coeffs.begin(), coeffs.end(), [](const exact::Rational& x) { return x == 0; });
    if (trivial && rhs >= 0) return;
    hive.add(std::move(coeffs), polytope::Relation::LE, std::move(rhs));
  };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      // shared edge (i,j)-(i,j+1)
      if (i >= 1 && i + 1 <= n && j + 1 <= i) rhombus({i, j}, {i, j + 1}, {i - 1, j}, {i + 1, j + 1});
      // shared edge (i,j)-(i+1,j)
      if (j >= 1 && i + 1 <= n) rhombus({i, j}, {i + 1, j}, {i, j - 1}, {i + 1, j + 1});
      // shared edge (i,j)-(i+1,j+1)
      if (j + 1 <= i && i + 1 <= n) rhombus({i, j}, {i + 1, j + 1}, {i + 1, j}, {i, j + 1});
    }
  return hive;
}

}  // namespace satip::combinat
