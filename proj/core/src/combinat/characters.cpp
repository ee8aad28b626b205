#include "satip/combinat/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "satip/error.hpp"

namespace satip::combinat {

namespace {

void check_sizes(const Partition& lambda, const CycleType& rho) {
  if (lambda.size() != rho.size()) {
    fail(ErrorCode::SizeMismatch, "|lambda| = " + std::to_string(lambda.size()) + " but |rho| = " +
                                      std::to_string(rho.size()));
  }
}

class MurnaghanNakayama {
 public:
  explicit MurnaghanNakayama(const CycleType& rho) : rho_(rho.parts()) {}

  Integer value(const std::vector<long>& parts, std::size_t depth) {
    if (depth == rho_.size()) return parts.empty() ? 1 : 0;
    auto key = std::make_pair(parts, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Beta set with one bead per part: b_i = parts_i + (k - 1 - i), descending.
    const std::size_t k = parts.size();
    std::vector<long> beads(k);
    for (std::size_t i = 0; i < k; ++i) beads[i] = parts[i] + static_cast<long>(k - 1 - i);
    const long r = rho_[depth];
    Integer total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const long target = beads[i] - r;
      if (target < 0 || std::binary_search(beads.rbegin(), beads.rend(), target)) continue;
      std::size_t between = 0;
      for (std::size_t j = i + 1; j < k; ++j)
        if (beads[j] > target) ++between;
      std::vector<long> moved = beads;
      moved[i] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<long> next(k);
      for (std::size_t j = 0; j < k; ++j) next[j] = moved[j] - static_cast<long>(k - 1 - j);
      while (!next.empty() && next.back() == 0) next.pop_back();
      const Integer sub = value(next, depth + 1);
      if (between % 2 == 0) {
        total += sub;
      } else {
        total -= sub;
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<long> rho_;
  std::map<std::pair<std::vector<long>, std::size_t>, Integer> memo_;
};

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

Integer sn_character(const Partition& lambda, const CycleType& rho) {
  check_sizes(lambda, rho);
  return MurnaghanNakayama(rho).value(lambda.parts(), 0);
}

Integer frobenius_character(const Partition& lambda, const CycleType& rho) {
  check_sizes(lambda, rho);
  const std::size_t k = lambda.height();
  if (k == 0) return 1;
  std::vector<long> l(k);
  for (std::size_t i = 0; i < k; ++i) l[i] = lambda[i] + static_cast<long>(k - 1 - i);

  // prod_r p_{rho_r}(x_1..x_k), keeping only exponents e with e_i <= l_i.
  std::map<std::vector<long>, Integer> product{{std::vector<long>(k, 0), Integer(1)}};
  for (long r : rho.parts()) {
    std::map<std::vector<long>, Integer> next;
    for (const auto& [e, c] : product)
      for (std::size_t i = 0; i < k; ++i) {
        if (e[i] + r > l[i]) continue;
        std::vector<long> f = e;
        f[i] += r;
        next[f] += c;
      }
    product = std::move(next);
  }

  // Delta(x) = sum_sigma sgn(sigma) prod_i x_i^{k - 1 - sigma(i)}.
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  Integer total = 0;
  do {
    std::vector<long> e(k);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      e[i] = l[i] - static_cast<long>(k - 1 - sigma[i]);
      ok = e[i] >= 0;
    }
    if (!ok) continue;
    const auto it = product.find(e);
    if (it == product.end()) continue;
    if (permutation_sign(sigma) > 0) {
      total += it->second;
    } else {
      total -= it->second;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

Integer kostant_partition(std::size_t rank, const std::vector<long>& weight) {
  if (weight.size() != rank) {
    fail(ErrorCode::DimensionMismatch, "weight has " + std::to_string(weight.size()) + " coordinates, rank is " +
                                           std::to_string(rank));
  }
  if (std::any_of(weight.begin(), weight.end(), [](long w) { return w < 0; })) return 0;
  if (rank == 0) return 1;
  std::vector<std::size_t> stride(rank);
  std::size_t cells = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    stride[i] = cells;
    cells *= static_cast<std::size_t>(weight[i] + 1);
  }
  std::vector<Integer> table(cells, Integer(0));
  table[0] = 1;
  std::vector<long> v(rank);
  for (std::size_t a = 0; a < rank; ++a)
    for (std::size_t b = a; b < rank; ++b) {
      // root alpha_a + ... + alpha_b
      std::size_t offset = 0;
      for (std::size_t i = a; i <= b; ++i) offset += stride[i];
      std::fill(v.begin(), v.end(), 0);
      for (std::size_t idx = 0; idx < cells; ++idx) {
        bool fits = true;
        for (std::size_t i = a; i <= b && fits; ++i) fits = v[i] >= 1;
        if (fits) table[idx] += table[idx - offset];
        for (std::size_t i = 0; i < rank; ++i) {
          if (++v[i] <= weight[i]) break;
          v[i] = 0;
        }
      }
    }
  return table[cells - 1];
}

Integer kostant_weight_multiplicity(const Partition& lambda, const std::vector<long>& mu) {
  const std::size_t k = mu.size();
  if (lambda.height() > k) return 0;
  if (std::accumulate(mu.begin(), mu.end(), 0L) != lambda.size()) return 0;
  if (k == 0) return 1;
  std::vector<long> shifted(k);
  for (std::size_t i = 0; i < k; ++i) shifted[i] = lambda[i] + static_cast<long>(k - 1 - i);
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  Integer total = 0;
  do {
    // w(lambda + rho) - (mu + rho) in simple-root coordinates.
    std::vector<long> coords(k - 1);
    long running = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      running += shifted[sigma[i]] - (mu[i] + static_cast<long>(k - 1 - i));
      coords[i] = running;
    }
    const Integer p = kostant_partition(k - 1, coords);
    if (p == 0) continue;
    if (permutation_sign(sigma) > 0) {
      total += p;
    } else {
      total -= p;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

exact::RationalPolynomial weyl_dim_poly(std::size_t k, const Partition& lambda) {
  if (lambda.height() > k) {
    fail(ErrorCode::HeightExceedsRank, "height " + std::to_string(lambda.height()) + " exceeds rank " +
                                           std::to_string(k));
  }
  exact::RationalPolynomial p = exact::RationalPolynomial::constant(1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const long gap = static_cast<long>(j - i);
      const exact::Rational slope = exact::make_rational(lambda[i] - lambda[j], gap);
      p = p * exact::RationalPolynomial{exact::Rational(1), slope};
    }
  return p;
}

Integer weyl_dimension(std::size_t k, const Partition& lambda) {
  if (lambda.height() > k) return 0;
  return weyl_dim_poly(k, lambda)(exact::Rational(1)).get_num();
}

}  // namespace satip::combinat
