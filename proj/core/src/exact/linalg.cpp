#include "satip/exact/linalg.hpp"

#include <algorithm>

namespace satip::exact {

namespace {

struct SmithWork {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    D.add_row_multiple(dst, src, f);
    U.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    D.add_col_multiple(dst, src, f);
    V.add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t r) {
    D.negate_row(r);
    U.negate_row(r);
  }
};

// Moves the minimal-|.| nonzero entry of the trailing block to (t, t).
bool place_min_pivot(SmithWork& w, std::size_t t) {
  const IntMatrix& D = w.D;
  std::size_t best_r = 0, best_c = 0;
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < D.rows(); ++r)
    for (std::size_t c = t; c < D.cols(); ++c) {
      if (D(r, c) == 0) continue;
      Integer a = abs(D(r, c));
      if (!found || a < best) {
        best = a;
        best_r = r;
        best_c = c;
        found = true;
      }
    }
  if (!found) return false;
  w.swap_rows(t, best_r);
  w.swap_cols(t, best_c);
  if (w.D(t, t) < 0) w.negate_row(t);
  return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithWork w{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t rank = 0;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    if (!place_min_pivot(w, t)) break;
    for (;;) {
      const Integer pivot = w.D(t, t);
      bool dirty = false;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (w.D(r, t) == 0) continue;
        w.add_row(r, t, -floor_div(w.D(r, t), pivot));
        if (w.D(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (w.D(t, c) == 0) continue;
        w.add_col(c, t, -floor_div(w.D(t, c), pivot));
        if (w.D(t, c) != 0) dirty = true;
      }
      if (!dirty) {
        // Row and column are clear; enforce pivot | every trailing entry.
        std::size_t bad_row = m;
        for (std::size_t r = t + 1; r < m && bad_row == m; ++r)
          for (std::size_t c = t + 1; c < n; ++c)
            if (w.D(r, c) % pivot != 0) {
              bad_row = r;
              break;
            }
        if (bad_row == m) break;
        w.add_row(t, bad_row, 1);
      }
      place_min_pivot(w, t);
    }
    ++rank;
  }
  return SmithDecomposition{std::move(w.U), std::move(w.D), std::move(w.V), rank};
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(row, sel);
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      m.add_row_multiple(r, row, Rational(-m(r, col)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RationalSolution> solve_rational(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "rhs length does not match row count");
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const std::vector<std::size_t> pivots = rref(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (aug(r, n) != 0) return std::nullopt;

  RationalSolution sol;
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    sol.particular[pivots[i]] = aug(i, n);
    is_pivot[pivots[i]] = true;
  }
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v(n, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug(i, free_col);
    sol.nullspace_basis.push_back(std::move(v));
  }
  return sol;
}

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return rref(m, m.cols()).size();
}

}  // namespace satip::exact
