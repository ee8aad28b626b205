#include "satip/polytope/simplex.hpp"

#include <limits>

namespace satip::polytope {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

void FeasibleRegion::pivot(Tableau& t, std::vector<Rational>& cost, Rational& cost_rhs,
                           std::size_t row, std::size_t col) {
  const Rational inv = 1 / t.at(row, col);
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < t.cols; ++j) {
    if (t.at(row, j) == 0) continue;
    t.at(row, j) *= inv;
    nz.push_back(j);
  }
  t.rhs[row] *= inv;
  Rational f;
  for (std::size_t i = 0; i < t.rows; ++i) {
    if (i == row || t.at(i, col) == 0) continue;
    f = t.at(i, col);
    for (std::size_t j : nz) t.at(i, j) -= f * t.at(row, j);
    t.rhs[i] -= f * t.rhs[row];
  }
  if (cost[col] != 0) {
    f = cost[col];
    for (std::size_t j : nz) cost[j] -= f * t.at(row, j);
    cost_rhs += f * t.rhs[row];
  }
  t.basis[row] = col;
}

bool FeasibleRegion::optimize(Tableau& t, std::vector<Rational>& cost, Rational& cost_rhs,
                              std::size_t usable_cols) {
  for (;;) {
    std::size_t enter = kNone;
    for (std::size_t j = 0; j < usable_cols; ++j)
      if (cost[j] > 0) {
        enter = j;
        break;
      }
    if (enter == kNone) return true;
    std::size_t leave = kNone;
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows; ++i) {
      if (t.at(i, enter) <= 0) continue;
      Rational ratio = t.rhs[i] / t.at(i, enter);
      if (leave == kNone || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == kNone) return false;
    pivot(t, cost, cost_rhs, leave, enter);
  }
}

FeasibleRegion::FeasibleRegion(const HPolytope& p) : dim_(p.dim()) {
  const std::size_t d = p.dim();
  std::size_t slack_count = 0;
  for (const Constraint& c : p.rows())
    if (c.relation != Relation::EQ) ++slack_count;

  // Column layout: u (d), v (d), slacks, artificials. x = u - v.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;
  std::vector<bool> needs_artificial;
  const std::size_t structural = 2 * d + slack_count;
  std::size_t slack = 2 * d;
  for (const Constraint& c : p.rows()) {
    std::vector<Rational> row(structural, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = c.coeffs[j];
      row[d + j] = -c.coeffs[j];
    }
    std::size_t my_slack = kNone;
    if (c.relation != Relation::EQ) {
      my_slack = slack++;
      row[my_slack] = 1;
    }
    Rational b = c.rhs;
    if (b < 0) {
      for (Rational& x : row) x = -x;
      b = -b;
    }
    const bool slack_basic = my_slack != kNone && row[my_slack] == 1;
    basis.push_back(slack_basic ? my_slack : kNone);
    needs_artificial.push_back(!slack_basic);
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  }

  std::size_t artificial_count = 0;
  for (bool b : needs_artificial) artificial_count += b ? 1 : 0;

  Tableau& t = tableau_;
  t.rows = rows.size();
  t.cols = structural + artificial_count;
  t.a.assign(t.rows * t.cols, Rational(0));
  t.rhs = std::move(rhs);
  t.basis = basis;
  std::size_t art = structural;
  for (std::size_t i = 0; i < t.rows; ++i) {
    for (std::size_t j = 0; j < structural; ++j) t.at(i, j) = rows[i][j];
    if (needs_artificial[i]) {
      t.at(i, art) = 1;
      t.basis[i] = art++;
    }
  }

  // Phase one: maximise -sum(artificials).
  std::vector<Rational> cost(t.cols, Rational(0));
  Rational value = 0;
  for (std::size_t i = 0; i < t.rows; ++i) {
    if (t.basis[i] < structural) continue;
    for (std::size_t j = 0; j < structural; ++j) cost[j] += t.at(i, j);
    value -= t.rhs[i];
  }
  if (artificial_count > 0) optimize(t, cost, value, t.cols);
  if (value < 0) {
    feasible_ = false;
    return;
  }
  feasible_ = true;

  // Drive artificials out of the basis; rows where that is impossible are redundant.
  std::vector<bool> keep(t.rows, true);
  for (std::size_t i = 0; i < t.rows; ++i) {
    if (t.basis[i] < structural) continue;
    std::size_t col = kNone;
    for (std::size_t j = 0; j < structural; ++j)
      if (t.at(i, j) != 0) {
        col = j;
        break;
      }
    if (col == kNone) {
      keep[i] = false;
    } else {
      pivot(t, cost, value, i, col);
    }
  }
  Tableau reduced;
  reduced.cols = structural;
  for (std::size_t i = 0; i < t.rows; ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < structural; ++j) reduced.a.push_back(t.at(i, j));
    reduced.rhs.push_back(t.rhs[i]);
    reduced.basis.push_back(t.basis[i]);
    ++reduced.rows;
  }
  tableau_ = std::move(reduced);
}

LpResult FeasibleRegion::maximize(const RationalVector& objective) const {
  LpResult result;
  if (!feasible_) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  Tableau t = tableau_;
  const std::size_t d = dim_;
  std::vector<Rational> c(t.cols, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    c[j] = objective[j];
    c[d + j] = -objective[j];
  }
  std::vector<Rational> cost = c;
  Rational value = 0;
  for (std::size_t i = 0; i < t.rows; ++i) {
    const Rational& cb = c[t.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < t.cols; ++j) cost[j] -= cb * t.at(i, j);
    value += cb * t.rhs[i];
  }
  if (!optimize(t, cost, value, t.cols)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.value = value;
  result.point.assign(d, Rational(0));
  for (std::size_t i = 0; i < t.rows; ++i) {
    const std::size_t b = t.basis[i];
    if (b < d) {
      result.point[b] += t.rhs[i];
    } else if (b < 2 * d) {
      result.point[b - d] -= t.rhs[i];
    }
  }
  return result;
}

LpResult FeasibleRegion::minimize(const RationalVector& objective) const {
  RationalVector neg = objective;
  for (Rational& x : neg) x = -x;
  LpResult r = maximize(neg);
  if (r.status == LpStatus::Optimal) r.value = -r.value;
  return r;
}

}  // namespace satip::polytope
