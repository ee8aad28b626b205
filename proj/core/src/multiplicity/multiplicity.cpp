#include "satip/multiplicity/multiplicity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "satip/combinat/characters.hpp"
#include "satip/combinat/tableaux.hpp"
#include "satip/error.hpp"

namespace satip::multiplicity {

using combinat::partitions;
using exact::Rational;

void SchurExpansion::add(const Partition& p, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer SchurExpansion::coefficient(const Partition& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

namespace {

void require_same_size(const Partition& a, const Partition& b, const Partition& c) {
  if (a.size() != b.size() || a.size() != c.size()) {
    fail(ErrorCode::SizeMismatch, "sizes " + std::to_string(a.size()) + ", " + std::to_string(b.size()) + ", " +
                                      std::to_string(c.size()) + " differ");
  }
}

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

// All permutations of {0..k-1} with their signs.
std::vector<std::pair<std::vector<std::size_t>, int>> signed_permutations(std::size_t k) {
  std::vector<std::pair<std::vector<std::size_t>, int>> out;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.emplace_back(p, permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Weight multiplicity of ((a1, a2), (b1, b2)) in V_pi(GL_4) restricted to
// GL_2 x GL_2: the GL_4 weights are (t, a1 - t, b1 - t, a2 - b1 + t).
Integer two_by_two_weight(const Partition& pi, long a1, long a2, long b1) {
  if (a1 < 0 || a2 < 0 || b1 < 0) return 0;
  const long lo = std::max(0L, b1 - a2);
  const long hi = std::min(a1, b1);
  Integer total = 0;
  for (long t = lo; t <= hi; ++t) total += combinat::kostka_bounded_height(pi, {t, a1 - t, b1 - t, a2 - b1 + t});
  return total;
}

}  // namespace

Integer kronecker_char(const Partition& lambda, const Partition& mu, const Partition& pi, long guard) {
  require_same_size(lambda, mu, pi);
  const long m = lambda.size();
  if (m > guard) {
    fail(ErrorCode::SizeGuardExceeded, "size " + std::to_string(m) + " exceeds the guard " + std::to_string(guard));
  }
  Rational total = 0;
  for (const Partition& rho : partitions(m)) {
    const Integer chi = combinat::sn_character(lambda, rho) * combinat::sn_character(mu, rho) *
                        combinat::sn_character(pi, rho);
    if (chi == 0) continue;
    total += exact::make_rational(chi, combinat::centralizer_size(rho));
  }
  return total.get_num();
}

Integer kronecker_two_row(const Partition& lambda, const Partition& mu, const Partition& pi) {
  if (lambda.height() > 2 || mu.height() > 2) fail(ErrorCode::HeightViolation, "lambda and mu need height <= 2");
  if (pi.height() > 4) fail(ErrorCode::HeightViolation, "pi needs height <= 4");
  require_same_size(lambda, mu, pi);
  const long l1 = lambda[0], l2 = lambda[1], m1 = mu[0];
  // Weyl group S_2 x S_2: lambda + rho - w(rho) is lambda or (l1 + 1, l2 - 1).
  return two_by_two_weight(pi, l1, l2, m1) - two_by_two_weight(pi, l1 + 1, l2 - 1, m1) -
         two_by_two_weight(pi, l1, l2, m1 + 1) + two_by_two_weight(pi, l1 + 1, l2 - 1, m1 + 1);
}

Integer klimyk_branching(std::size_t m, std::pair<std::size_t, std::size_t> embedding, const Partition& lambda,
                         const Partition& alpha, const Partition& beta) {
  const auto [a, b] = embedding;
  if (a == 0 || b == 0 || a * b != m) {
    fail(ErrorCode::UnsupportedEmbedding, "only GL_a x GL_b in GL_ab is supported, got a = " + std::to_string(a) +
                                              ", b = " + std::to_string(b) + ", m = " + std::to_string(m));
  }
  if (lambda.height() > m || alpha.height() > a || beta.height() > b) return 0;
  if (alpha.size() != lambda.size() || beta.size() != lambda.size()) return 0;

  // Restricted weight multiplicities, from the weights of V_lambda.
  std::map<std::pair<std::vector<long>, std::vector<long>>, Integer> restricted;
  for (const Partition& dominant : partitions(lambda.size(), static_cast<long>(m))) {
    if (!combinat::dominates(lambda, dominant)) continue;
    std::vector<long> w = dominant.padded(m);
    const Integer mult = combinat::kostka(lambda, w);
    if (mult == 0) continue;
    std::sort(w.begin(), w.end());
    do {
      std::vector<long> u(a, 0), v(b, 0);
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) {
          u[i] += w[i * b + j];
          v[j] += w[i * b + j];
        }
      restricted[{std::move(u), std::move(v)}] += mult;
    } while (std::next_permutation(w.begin(), w.end()));
  }

  const std::vector<long> al = alpha.padded(a), be = beta.padded(b);
  Integer total = 0;
  for (const auto& [sigma, s1] : signed_permutations(a))
    for (const auto& [tau, s2] : signed_permutations(b)) {
      std::vector<long> u(a), v(b);
      for (std::size_t i = 0; i < a; ++i)
        u[i] = al[i] + static_cast<long>(a - 1 - i) - static_cast<long>(a - 1 - sigma[i]);
      for (std::size_t j = 0; j < b; ++j)
        v[j] = be[j] + static_cast<long>(b - 1 - j) - static_cast<long>(b - 1 - tau[j]);
      const auto it = restricted.find({u, v});
      if (it == restricted.end()) continue;
      if (s1 * s2 > 0) {
        total += it->second;
      } else {
        total -= it->second;
      }
    }
  return total;
}

namespace {

void check_plethysm_guard(const Partition& lambda, const Partition& mu, long guard) {
  const long n = lambda.size() * mu.size();
  if (n > guard) {
    fail(ErrorCode::SizeGuardExceeded,
         "plethysm degree " + std::to_string(n) + " exceeds the guard " + std::to_string(guard));
  }
}

using PowerSumExpansion = std::map<Partition, Rational>;

// s_lambda = sum_rho chi_lambda(rho) / z_rho p_rho.
PowerSumExpansion schur_in_power_sums(const Partition& lambda) {
  PowerSumExpansion out;
  for (const Partition& rho : partitions(lambda.size())) {
    const Integer chi = combinat::sn_character(lambda, rho);
    if (chi != 0) out.emplace(rho, exact::make_rational(chi, combinat::centralizer_size(rho)));
  }
  return out;
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<long> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace

SchurExpansion plethysm_p_basis(const Partition& lambda, const Partition& mu, long guard) {
  check_plethysm_guard(lambda, mu, guard);
  const PowerSumExpansion outer = schur_in_power_sums(lambda);
  const PowerSumExpansion inner = schur_in_power_sums(mu);

  // p_k[s_mu] = sum_sigma c_sigma p_{k sigma}.
  std::map<long, PowerSumExpansion> inner_scaled;
  for (const auto& [rho, c] : outer)
    for (long k : rho.parts()) {
      if (inner_scaled.count(k)) continue;
      PowerSumExpansion& target = inner_scaled[k];
      for (const auto& [sigma, d] : inner) target.emplace(sigma.scaled(k), d);
    }

  PowerSumExpansion result;
  for (const auto& [rho, c] : outer) {
    PowerSumExpansion product{{Partition(), c}};
    for (long k : rho.parts()) {
      PowerSumExpansion next;
      for (const auto& [tau, x] : product)
        for (const auto& [sigma, y] : inner_scaled[k]) next[merge(tau, sigma)] += x * y;
      product = std::move(next);
    }
    for (const auto& [tau, x] : product) result[tau] += x;
  }

  // p_tau = sum_pi chi_pi(tau) s_pi.
  SchurExpansion out;
  const long n = lambda.size() * mu.size();
  for (const Partition& pi : partitions(n)) {
    Rational a = 0;
    for (const auto& [tau, x] : result)
      if (x != 0) a += x * combinat::sn_character(pi, tau);
    if (a.get_den() != 1) fail(ErrorCode::InvalidArgument, "non-integral plethysm coefficient");
    out.add(pi, a.get_num());
  }
  return out;
}

namespace {

// Semistandard tableaux of shape mu, entries in 1..k, whose content is
// bounded by `bound` entrywise; each is recorded by its content.
void tableaux_contents(const Partition& mu, const std::vector<long>& bound, std::vector<std::vector<long>>& out) {
  const std::size_t k = bound.size();
  std::vector<std::vector<long>> rows(mu.height());
  for (std::size_t r = 0; r < mu.height(); ++r) rows[r].assign(static_cast<std::size_t>(mu[r]), 0);
  std::vector<long> content(k, 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < mu.height(); ++r)
    for (long c = 0; c < mu[r]; ++c) cells.emplace_back(r, static_cast<std::size_t>(c));

  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      out.push_back(content);
      return;
    }
    const auto [r, c] = cells[idx];
    long lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (long e = lo; e <= static_cast<long>(k); ++e) {
      const auto ei = static_cast<std::size_t>(e - 1);
      if (content[ei] == bound[ei]) continue;
      ++content[ei];
      rows[r][c] = e;
      self(self, idx + 1);
      --content[ei];
    }
    rows[r][c] = 0;
  };
  fill(fill, 0);
}

void sub_shapes(const std::vector<long>& outer, std::size_t i, std::vector<long>& cur,
                std::vector<std::vector<long>>& out) {
  if (i == outer.size()) {
    out.push_back(cur);
    return;
  }
  const long cap = i == 0 ? outer[0] : std::min(outer[i], cur[i - 1]);
  for (long len = 0; len <= cap; ++len) {
    cur[i] = len;
    sub_shapes(outer, i + 1, cur, out);
  }
  cur[i] = 0;
}

// Coefficient of x^nu in s_lambda(x^{t(T_1)}, x^{t(T_2)}, ...), the T_i
// running over the tableaux listed: fill lambda letter by letter with
// horizontal strips, tracking the exponent accumulated so far. Exponents
// bounded by nu are stored in mixed radix (nu_j + 1).
Integer substituted_monomial(const Partition& lambda, const std::vector<std::vector<long>>& monomials,
                             const std::vector<long>& nu) {
  const std::vector<long> full = lambda.parts();
  std::vector<std::vector<long>> shapes;
  std::vector<long> scratch(full.size(), 0);
  sub_shapes(full, 0, scratch, shapes);
  std::map<std::vector<long>, std::size_t> shape_id;
  for (std::size_t i = 0; i < shapes.size(); ++i) shape_id.emplace(shapes[i], i);

  // strips[s] = (target shape, cells added), horizontal strips inside lambda.
  std::vector<std::vector<std::pair<std::size_t, long>>> strips(shapes.size());
  for (std::size_t s = 0; s < shapes.size(); ++s)
    for (std::size_t t = 0; t < shapes.size(); ++t) {
      const auto& a = shapes[s];
      const auto& b = shapes[t];
      bool ok = true;
      long added = 0;
      for (std::size_t i = 0; i < a.size() && ok; ++i) {
        ok = b[i] >= a[i] && (i == 0 || b[i] <= a[i - 1]);
        added += b[i] - a[i];
      }
      if (ok) strips[s].emplace_back(t, added);
    }

  const std::size_t k = nu.size();
  std::vector<std::size_t> stride(k);
  std::size_t cells = 1;
  for (std::size_t j = 0; j < k; ++j) {
    stride[j] = cells;
    cells *= static_cast<std::size_t>(nu[j] + 1);
  }
  std::vector<std::vector<long>> digits(cells, std::vector<long>(k, 0));
  for (std::size_t e = 1; e < cells; ++e) {
    digits[e] = digits[e - 1];
    for (std::size_t j = 0; j < k; ++j) {
      if (++digits[e][j] <= nu[j]) break;
      digits[e][j] = 0;
    }
  }

  std::vector<std::int64_t> cur(shapes.size() * cells, 0), next;
  cur[shape_id.at(std::vector<long>(full.size(), 0)) * cells] = 1;
  for (const auto& mono : monomials) {
    std::vector<std::size_t> support;
    std::size_t offset = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (mono[j] != 0) {
        support.push_back(j);
        offset += static_cast<std::size_t>(mono[j]) * stride[j];
      }
    next.assign(cur.size(), 0);
    for (std::size_t s = 0; s < shapes.size(); ++s)
      for (std::size_t e = 0; e < cells; ++e) {
        const std::int64_t count = cur[s * cells + e];
        if (count == 0) continue;
        for (const auto& [t, added] : strips[s]) {
          bool fits = true;
          for (std::size_t j : support) fits = fits && digits[e][j] + added * mono[j] <= nu[j];
          if (!fits) continue;
          std::int64_t& slot = next[t * cells + e + static_cast<std::size_t>(added) * offset];
          if (__builtin_add_overflow(slot, count, &slot)) fail(ErrorCode::Overflow, "plethysm count overflow");
        }
      }
    cur.swap(next);
  }
  return Integer(static_cast<long>(cur[shape_id.at(full) * cells + cells - 1]));
}

}  // namespace

SchurExpansion plethysm_weyl_substitution(const Partition& lambda, const Partition& mu, std::size_t k, long guard) {
  check_plethysm_guard(lambda, mu, guard);
  const long n = lambda.size() * mu.size();
  if (k == 0) k = static_cast<std::size_t>(lambda.size()) * mu.height();
  if (n == 0) {
    SchurExpansion out;
    out.add(Partition(), 1);
    return out;
  }
  SchurExpansion out;
  // Decreasing lexicographic order refines dominance, so every pi that can
  // contribute K_{pi, nu} is already known when nu is reached.
  for (const Partition& nu : partitions(n, static_cast<long>(k))) {
    const std::vector<long> bound = nu.padded(k);
    std::vector<std::vector<long>> monomials;
    tableaux_contents(mu, bound, monomials);
    Integer coeff = substituted_monomial(lambda, monomials, bound);
    for (const auto& [pi, a] : out.terms()) coeff -= a * combinat::kostka(pi, bound);
    out.add(nu, coeff);
  }
  return out;
}

Integer partitions_into_at_most(long n, long k) {
  if (n < 0 || k < 0) return 0;
  std::vector<Integer> table(static_cast<std::size_t>(n + 1), Integer(0));
  table[0] = 1;
  // Parts of size 1..k, by conjugation.
  for (long part = 1; part <= k; ++part)
    for (long s = part; s <= n; ++s) table[static_cast<std::size_t>(s)] += table[static_cast<std::size_t>(s - part)];
  return table[static_cast<std::size_t>(n)];
}

quasipoly::QuasiPolynomial syminv_hilbert(long k, long horizon) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  long period = 1;
  for (long i = 1; i <= k; ++i) period = std::lcm(period, i);
  if (horizon < period * k) {
    fail(ErrorCode::InsufficientHorizon, "need at least " + std::to_string(period * k) + " samples, got " +
                                             std::to_string(horizon));
  }
  std::vector<quasipoly::Sample> samples;
  for (long n = 1; n <= horizon; ++n) samples.push_back({n, Rational(partitions_into_at_most(n, k))});
  return quasipoly::fit(samples, static_cast<std::size_t>(period), static_cast<std::size_t>(k - 1));
}

std::string_view stretch_kind_name(StretchKind kind) noexcept {
  switch (kind) {
    case StretchKind::LR:
      return "LR";
    case StretchKind::Kronecker2Row:
      return "KRONECKER2ROW";
    case StretchKind::Plethysm:
      return "PLETHYSM";
    case StretchKind::SymInv:
      return "SYMINV";
    case StretchKind::GpHilbert:
      return "GP_HILBERT";
  }
  return "?";
}

namespace {

void validate(const StretchSpec& spec) {
  std::size_t labels = 0;
  switch (spec.kind) {
    case StretchKind::LR:
    case StretchKind::Kronecker2Row:
    case StretchKind::Plethysm:
      labels = 3;
      break;
    case StretchKind::SymInv:
      labels = 0;
      break;
    case StretchKind::GpHilbert:
      labels = 1;
      break;
  }
  if (spec.labels.size() != labels) {
    fail(ErrorCode::InvalidArgument, std::string(stretch_kind_name(spec.kind)) + " takes " + std::to_string(labels) +
                                         " partitions, got " + std::to_string(spec.labels.size()));
  }
  if ((spec.kind == StretchKind::SymInv || spec.kind == StretchKind::GpHilbert) && spec.k < 1) {
    fail(ErrorCode::InvalidArgument, "k must be at least 1");
  }
  if (spec.horizon < 1) fail(ErrorCode::InvalidArgument, "horizon must be at least 1");
  if (spec.period_bound < 1) fail(ErrorCode::InvalidArgument, "period bound must be at least 1");
}

}  // namespace

Integer stretch_value(const StretchSpec& spec, long n) {
  validate(spec);
  const auto& l = spec.labels;
  switch (spec.kind) {
    case StretchKind::LR:
      return combinat::lr_coefficient(l[0].scaled(n), l[1].scaled(n), l[2].scaled(n));
    case StretchKind::Kronecker2Row:
      return kronecker_two_row(l[0].scaled(n), l[1].scaled(n), l[2].scaled(n));
    case StretchKind::Plethysm: {
      if (l[0].size() * n * l[1].size() != l[2].size() * n) return 0;
      const std::size_t k = std::max<std::size_t>(l[2].height(), 1);
      return plethysm_weyl_substitution(l[0].scaled(n), l[1], k, spec.guard).coefficient(l[2].scaled(n));
    }
    case StretchKind::SymInv:
      return partitions_into_at_most(n, spec.k);
    case StretchKind::GpHilbert:
      return combinat::weyl_dimension(static_cast<std::size_t>(spec.k), l[0].scaled(n));
  }
  return 0;
}

StretchResult stretching_quasipolynomial(const StretchSpec& spec) {
  validate(spec);
  StretchResult result;
  result.samples.assign(static_cast<std::size_t>(spec.horizon), Integer(0));

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(spec.threads, result.samples.size()));
  std::atomic<long> next{1};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (long n = next++; n <= spec.horizon; n = next++) {
      try {
        result.samples[static_cast<std::size_t>(n - 1)] = stretch_value(spec, n);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<quasipoly::Sample> samples;
  for (long n = 1; n <= spec.horizon; ++n) samples.push_back({n, Rational(result.samples[static_cast<std::size_t>(n - 1)])});
  auto fitted = quasipoly::fit_search(samples, spec.period_bound, spec.degree_bound);
  if (!fitted) {
    fail(ErrorCode::InconsistentSamples, "no quasi-polynomial with period <= " + std::to_string(spec.period_bound) +
                                             " and degree <= " + std::to_string(spec.degree_bound) +
                                             " fits the samples");
  }
  result.quasi_polynomial = *fitted;
  result.generating_function = quasipoly::generating_function(result.quasi_polynomial);
  if (const long d = result.quasi_polynomial.degree(); d >= 0) {
    result.positive_form =
        quasipoly::positive_form_search(result.generating_function, static_cast<std::size_t>(d), spec.period_bound);
  }
  result.index = quasipoly::index(result.quasi_polynomial);
  try {
    result.saturation_index = quasipoly::saturation_index(result.quasi_polynomial, spec.index_cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
  }
  try {
    result.positivity_index = quasipoly::positivity_index(result.quasi_polynomial, spec.index_cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
  }
  return result;
}

}  // namespace satip::multiplicity
