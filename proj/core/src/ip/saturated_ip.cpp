#include "satip/ip/saturated_ip.hpp"

#include <algorithm>

#include "satip/combinat/tableaux.hpp"
#include "satip/error.hpp"
#include "satip/exact/linalg.hpp"

namespace satip::ip {

std::vector<Integer> ehrhart_samples(const HPolytope& p, long horizon) {
  const auto count = static_cast<std::size_t>(std::max(horizon, 0L));
  if (polytope::is_empty(p)) return std::vector<Integer>(count, Integer(0));
  polytope::bounding_box(p);  // raises Unbounded
  std::vector<Integer> out;
  out.reserve(count);
  for (long n = 1; n <= horizon; ++n) out.push_back(polytope::count_lattice_points(polytope::dilate(p, n)));
  return out;
}

quasipoly::QuasiPolynomial ehrhart_quasipoly(const HPolytope& p, std::size_t period_bound,
                                             std::optional<std::size_t> degree_bound) {
  if (period_bound == 0) fail(ErrorCode::InvalidArgument, "period bound must be at least 1");
  const std::size_t degree = degree_bound.value_or(p.dim());
  const auto horizon = static_cast<long>(period_bound * (degree + 2));
  const std::vector<Integer> counts = ehrhart_samples(p, horizon);
  std::vector<quasipoly::Sample> samples;
  for (long n = 1; n <= horizon; ++n) samples.push_back({n, Rational(counts[static_cast<std::size_t>(n - 1)])});
  auto fitted = quasipoly::fit_search(samples, period_bound, degree);
  if (!fitted) {
    fail(ErrorCode::InconsistentSamples, "no quasi-polynomial with period <= " + std::to_string(period_bound) +
                                             " and degree <= " + std::to_string(degree) + " fits the counts");
  }
  return *fitted;
}

namespace {

// Diagonal entries c_i and transformed right-hand sides d_i of the Smith
// form of the affine span; verifies that the zero rows are consistent.
std::vector<std::pair<Integer, Integer>> diagonal_system(const HPolytope& p) {
  const polytope::AffineSpan span = polytope::affine_span(p);
  std::vector<std::pair<Integer, Integer>> out;
  if (span.C.rows() == 0) return out;
  const exact::SmithDecomposition snf = exact::smith_normal_form(span.C);
  const exact::IntVector rhs = snf.U * std::span<const Integer>(span.d);
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (i < snf.rank) {
      out.emplace_back(exact::abs(snf.D(i, i)), rhs[i]);
    } else if (rhs[i] != 0) {
      fail(ErrorCode::InconsistentSpan, "zero row " + std::to_string(i) + " of the Smith form has rhs " +
                                            exact::to_string(rhs[i]));
    }
  }
  return out;
}

}  // namespace

Integer ehrhart_index(const HPolytope& p) {
  if (polytope::is_empty(p)) return 0;
  Integer index = 1;
  for (const auto& [c, d] : diagonal_system(p)) index = exact::lcm(index, c / exact::gcd(c, d));
  return index;
}

bool affine_span_has_integer_point(const HPolytope& p) {
  if (polytope::is_empty(p)) fail(ErrorCode::EmptyPolytope, "affine span of an empty polytope");
  for (const auto& [c, d] : diagonal_system(p))
    if (d % c != 0) return false;
  return true;
}

bool saturated_ip_decide(const SaturatedIPInstance& inst, const Integer& c) {
  if (inst.sie.has_value() == inst.pie.has_value()) {
    fail(ErrorCode::InvalidArgument, "exactly one of sie and pie must be given");
  }
  const Integer& estimate = inst.sie ? *inst.sie : *inst.pie;
  if (c <= estimate) {
    fail(ErrorCode::RelaxationTooSmall, "relaxation " + exact::to_string(c) + " must exceed the estimate " +
                                            exact::to_string(estimate));
  }
  const Integer index = ehrhart_index(inst.polytope);
  return index != 0 && c % index == 0;
}

bool lr_nonvanishing(const Partition& alpha, const Partition& beta, const Partition& lambda, std::size_t n) {
  if (n == 0) n = std::max({alpha.height(), beta.height(), lambda.height(), std::size_t{1}});
  return !polytope::is_empty(combinat::hive_polytope(alpha, beta, lambda, n));
}

bool lr_nonvanishing(const RationalVector& alpha, const RationalVector& beta, const RationalVector& lambda,
                     std::size_t n) {
  Integer scale = 1;
  for (const auto* v : {&alpha, &beta, &lambda})
    for (const Rational& x : *v) scale = exact::lcm(scale, x.get_den());
  auto to_partition = [&](const RationalVector& v) -> std::optional<Partition> {
    std::vector<long> parts;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0 || (i > 0 && v[i] > v[i - 1])) return std::nullopt;
      parts.push_back(exact::to_int64(Integer(v[i] * scale)));
    }
    return Partition(std::move(parts));
  };
  const auto a = to_partition(alpha), b = to_partition(beta), l = to_partition(lambda);
  if (!a || !b || !l || a->size() + b->size() != l->size()) return false;
  if (n == 0) n = std::max({alpha.size(), beta.size(), lambda.size(), std::size_t{1}});
  return lr_nonvanishing(*a, *b, *l, n);
}

std::string_view obstruction_name(Obstruction o) noexcept {
  switch (o) {
    case Obstruction::Geometric:
      return "GEOMETRIC";
    case Obstruction::Modular:
      return "MODULAR";
    case Obstruction::None:
      return "NONE";
  }
  return "?";
}

Obstruction robust_obstruction_check(const HPolytope& p, const HPolytope& q) {
  const bool p_empty = polytope::is_empty(p);
  const bool q_empty = polytope::is_empty(q);
  if (q_empty && !p_empty) return Obstruction::Geometric;
  if (!p_empty && !q_empty && !affine_span_has_integer_point(q) && affine_span_has_integer_point(p)) {
    return Obstruction::Modular;
  }
  return Obstruction::None;
}

}  // namespace satip::ip
