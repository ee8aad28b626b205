#include "satip/polytope/hpolytope.hpp"

#include <algorithm>
#include <numeric>

#include "satip/error.hpp"
#include "satip/exact/linalg.hpp"
#include "satip/polytope/simplex.hpp"

namespace satip::polytope {

std::string_view relation_name(Relation rel) noexcept {
  switch (rel) {
    case Relation::LE: return "le";
    case Relation::LT: return "lt";
    case Relation::EQ: return "eq";
  }
  return "?";
}

HPolytope::HPolytope(std::size_t dim, std::vector<Constraint> rows) : dim_(dim) {
  for (Constraint& c : rows) add(std::move(c));
}

HPolytope& HPolytope::add(Constraint row) {
  if (row.coeffs.size() != dim_) {
    fail(ErrorCode::DimensionMismatch, "constraint has " + std::to_string(row.coeffs.size()) +
                                           " coefficients, polytope dimension is " + std::to_string(dim_));
  }
  rows_.push_back(std::move(row));
  return *this;
}

HPolytope HPolytope::box(const RationalVector& lo, const RationalVector& hi) {
  if (lo.size() != hi.size()) fail(ErrorCode::DimensionMismatch, "box bounds differ in length");
  HPolytope p(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    RationalVector e(lo.size(), Rational(0));
    e[i] = 1;
    p.add(e, Relation::LE, hi[i]);
    e[i] = -1;
    p.add(e, Relation::LE, -lo[i]);
  }
  return p;
}

bool contains(const HPolytope& p, const RationalVector& x) {
  if (x.size() != p.dim()) fail(ErrorCode::DimensionMismatch, "point dimension mismatch");
  for (const Constraint& c : p.rows()) {
    const Rational lhs = exact::dot(c.coeffs, x);
    switch (c.relation) {
      case Relation::LE:
        if (!(lhs <= c.rhs)) return false;
        break;
      case Relation::LT:
        if (!(lhs < c.rhs)) return false;
        break;
      case Relation::EQ:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

HPolytope dilate(const HPolytope& p, const Integer& n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "dilation factor must be positive");
  HPolytope out(p.dim());
  for (const Constraint& c : p.rows()) out.add(c.coeffs, c.relation, c.rhs * n);
  return out;
}

namespace {

bool has_strict_rows(const HPolytope& p) {
  return std::any_of(p.rows().begin(), p.rows().end(),
                     [](const Constraint& c) { return c.relation == Relation::LT; });
}

}  // namespace

bool is_empty(const HPolytope& p) {
  if (!has_strict_rows(p)) return !FeasibleRegion(p).feasible();

  // max tau s.t. LE/EQ rows, a.x + tau <= b for strict rows, tau <= 1.
  const std::size_t d = p.dim();
  HPolytope lifted(d + 1);
  for (const Constraint& c : p.rows()) {
    RationalVector a = c.coeffs;
    a.push_back(c.relation == Relation::LT ? Rational(1) : Rational(0));
    lifted.add(std::move(a), c.relation == Relation::EQ ? Relation::EQ : Relation::LE, c.rhs);
  }
  RationalVector tau(d + 1, Rational(0));
  tau[d] = 1;
  lifted.add(tau, Relation::LE, Rational(1));
  FeasibleRegion region(lifted);
  if (!region.feasible()) return true;
  const LpResult r = region.maximize(tau);
  return r.status == LpStatus::Optimal && r.value <= 0;
}

AffineSpan affine_span(const HPolytope& p) {
  if (is_empty(p)) fail(ErrorCode::EmptyPolytope, "affine span of an empty polytope");
  const FeasibleRegion region(p);
  std::vector<std::pair<RationalVector, Rational>> equalities;
  for (const Constraint& c : p.rows()) {
    if (c.relation == Relation::EQ) {
      equalities.emplace_back(c.coeffs, c.rhs);
    } else if (c.relation == Relation::LE) {
      const LpResult r = region.minimize(c.coeffs);
      if (r.status == LpStatus::Optimal && r.value == c.rhs) equalities.emplace_back(c.coeffs, c.rhs);
    }
  }

  AffineSpan span;
  std::vector<IntVector> kept_rows;
  exact::RationalMatrix basis(0, p.dim());
  std::vector<Rational> kept_entries;
  std::size_t current_rank = 0;
  for (const auto& [coeffs, rhs] : equalities) {
    std::vector<Rational> trial = kept_entries;
    trial.insert(trial.end(), coeffs.begin(), coeffs.end());
    exact::RationalMatrix m(kept_rows.size() + 1, p.dim(), trial);
    const std::size_t r = exact::rank(m);
    if (r == current_rank) continue;
    current_rank = r;
    kept_entries = std::move(trial);

    RationalVector full = coeffs;
    full.push_back(rhs);
    IntVector row = exact::clear_denominators(full);
    Integer g = 0;
    for (const Integer& x : row) g = exact::gcd(g, x);
    for (Integer& x : row) x /= g;
    const auto lead = std::find_if(row.begin(), row.end() - 1, [](const Integer& x) { return x != 0; });
    if (*lead < 0)
      for (Integer& x : row) x = -x;
    kept_rows.push_back(std::move(row));
  }
  span.C = IntMatrix(kept_rows.size(), p.dim());
  for (std::size_t i = 0; i < kept_rows.size(); ++i) {
    for (std::size_t j = 0; j < p.dim(); ++j) span.C(i, j) = kept_rows[i][j];
    span.d.push_back(kept_rows[i][p.dim()]);
  }
  return span;
}

BoundingBox bounding_box(const HPolytope& p) {
  if (is_empty(p)) fail(ErrorCode::EmptyPolytope, "bounding box of an empty polytope");
  const FeasibleRegion region(p);
  BoundingBox box;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    RationalVector e(p.dim(), Rational(0));
    e[i] = 1;
    const LpResult hi = region.maximize(e);
    const LpResult lo = region.minimize(e);
    if (hi.status != LpStatus::Optimal || lo.status != LpStatus::Optimal) {
      fail(ErrorCode::Unbounded, "coordinate " + std::to_string(i) + " is unbounded");
    }
    box.lo.push_back(lo.value);
    box.hi.push_back(hi.value);
  }
  return box;
}

Integer vertex_denominator_lcm(const HPolytope& p) {
  const std::size_t d = p.dim();
  const std::size_t m = p.rows().size();
  Integer result = 1;
  if (d == 0 || m < d) return result;
  HPolytope closure(d);
  for (const Constraint& c : p.rows())
    closure.add(c.coeffs, c.relation == Relation::LT ? Relation::LE : c.relation, c.rhs);

  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
  do {
    exact::RationalMatrix a(d, d);
    RationalVector b;
    std::size_t r = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!pick[i]) continue;
      for (std::size_t j = 0; j < d; ++j) a(r, j) = p.rows()[i].coeffs[j];
      b.push_back(p.rows()[i].rhs);
      ++r;
    }
    const auto sol = exact::solve_rational(a, b);
    if (!sol || !sol->nullspace_basis.empty()) continue;
    if (!contains(closure, sol->particular)) continue;
    for (const Rational& x : sol->particular) result = exact::lcm(result, x.get_den());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return result;
}

}  // namespace satip::polytope
