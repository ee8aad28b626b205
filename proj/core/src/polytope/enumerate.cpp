// Exhaustive lattice-point enumeration.
//
// Rows are integerised (strict rows become a.x <= b - 1) and the variables
// are eliminated from last to first: an equality with a nonzero coefficient
// is used for substitution, otherwise Fourier-Motzkin pairs the lower and
// upper bounds. A level whose pair count would exceed kFourierMotzkinCap
// keeps only the rows free of the eliminated variable, which is a valid
// relaxation of the projection. Enumeration then walks x_1, x_2, ... and
// bounds x_k by the level-k rows intersected with the LP bounding box. The
// last level uses the original rows, so every leaf is an exact member.

#include <algorithm>
#include <functional>

#include "satip/error.hpp"
#include "satip/polytope/hpolytope.hpp"

namespace satip::polytope {

namespace {

constexpr std::size_t kFourierMotzkinCap = 4000;

struct IntRow {
  IntVector a;
  Integer b;
  bool eq = false;

  friend bool operator==(const IntRow&, const IntRow&) = default;
  friend auto operator<=>(const IntRow& x, const IntRow& y) {
    if (x.eq != y.eq) return x.eq <=> y.eq;
    if (auto c = std::lexicographical_compare_three_way(
            x.a.begin(), x.a.end(), y.a.begin(), y.a.end(),
            [](const Integer& p, const Integer& q) { return cmp(p, q) <=> 0; });
        c != 0)
      return c;
    return cmp(x.b, y.b) <=> 0;
  }
};

// Divides by the coefficient gcd; returns false if the row has no integer
// solutions at all. Rows with all-zero coefficients are reported via `trivial`.
bool normalize(IntRow& row, bool& trivial) {
  Integer g = 0;
  for (const Integer& x : row.a) g = exact::gcd(g, x);
  if (g == 0) {
    trivial = true;
    return row.eq ? row.b == 0 : row.b >= 0;
  }
  trivial = false;
  if (row.eq) {
    if (row.b % g != 0) return false;
    for (Integer& x : row.a) x /= g;
    row.b /= g;
    auto lead = std::find_if(row.a.begin(), row.a.end(), [](const Integer& x) { return x != 0; });
    if (*lead < 0) {
      for (Integer& x : row.a) x = -x;
      row.b = -row.b;
    }
  } else if (g != 1) {
    for (Integer& x : row.a) x /= g;
    row.b = exact::floor_div(row.b, g);
  }
  return true;
}

struct Levels {
  bool infeasible = false;
  std::vector<std::vector<IntRow>> rows;  // rows[k]: rows whose last nonzero coefficient is k
};

// Adds `row` to `out` after normalisation; flags infeasibility.
void push_normalized(IntRow row, std::vector<IntRow>& out, bool& infeasible) {
  bool trivial = false;
  if (!normalize(row, trivial)) {
    infeasible = true;
    return;
  }
  if (!trivial) out.push_back(std::move(row));
}

Levels build_levels(const HPolytope& p) {
  const std::size_t d = p.dim();
  Levels lv;
  lv.rows.resize(d);
  std::vector<IntRow> current;
  for (const Constraint& c : p.rows()) {
    RationalVector full = c.coeffs;
    full.push_back(c.rhs);
    IntVector ints = exact::clear_denominators(full);
    IntRow row;
    row.b = ints.back();
    ints.pop_back();
    row.a = std::move(ints);
    row.eq = c.relation == Relation::EQ;
    if (c.relation == Relation::LT) row.b -= 1;
    push_normalized(std::move(row), current, lv.infeasible);
  }
  for (std::size_t k = d; k-- > 0;) {
    if (lv.infeasible) return lv;
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());

    std::vector<IntRow> next;
    std::vector<IntRow> pos, neg;
    const IntRow* pivot_eq = nullptr;
    for (const IntRow& r : current) {
      if (r.a[k] == 0) {
        next.push_back(r);
        continue;
      }
      lv.rows[k].push_back(r);
      if (r.eq) {
        if (pivot_eq == nullptr) pivot_eq = &r;
      } else if (r.a[k] > 0) {
        pos.push_back(r);
      } else {
        neg.push_back(r);
      }
    }
    if (pivot_eq != nullptr) {
      const IntRow& e = *pivot_eq;
      const Integer e_abs = exact::abs(e.a[k]);
      const int e_sign = sgn(e.a[k]);
      for (const IntRow& r : current) {
        if (&r == pivot_eq || r.a[k] == 0) continue;
        IntRow combo;
        combo.eq = r.eq;
        combo.a.resize(d);
        const Integer f = e_sign * r.a[k];
        for (std::size_t j = 0; j < d; ++j) combo.a[j] = e_abs * r.a[j] - f * e.a[j];
        combo.b = e_abs * r.b - f * e.b;
        push_normalized(std::move(combo), next, lv.infeasible);
      }
    } else if (pos.size() * neg.size() <= kFourierMotzkinCap) {
      for (const IntRow& u : pos)
        for (const IntRow& l : neg) {
          IntRow combo;
          combo.a.resize(d);
          const Integer fu = -l.a[k];
          const Integer& fl = u.a[k];
          for (std::size_t j = 0; j < d; ++j) combo.a[j] = fu * u.a[j] + fl * l.a[j];
          combo.b = fu * u.b + fl * l.b;
          push_normalized(std::move(combo), next, lv.infeasible);
        }
    }
    current = std::move(next);
  }
  return lv;
}

// Scalar policies: a fast path on int64 coefficients with 128-bit
// accumulators, and the arbitrary-precision fallback.
struct FastScalar {
  using Coef = std::int64_t;
  using Acc = __int128;
  static Coef coef(const Integer& x) { return exact::to_int64(x); }
  static Acc floor_div(Acc a, Acc b) {
    Acc q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  static Acc ceil_div(Acc a, Acc b) { return -floor_div(-a, b); }
  static bool divides(Acc a, Acc b) { return b % a == 0; }
  static Integer to_integer(Acc v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(u >> 64));
    Integer lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    Integer out = (hi << 64) + lo;
    return negative ? Integer(-out) : out;
  }
};

struct BigScalar {
  using Coef = Integer;
  using Acc = Integer;
  static Coef coef(const Integer& x) { return x; }
  static Acc floor_div(const Acc& a, const Acc& b) { return exact::floor_div(a, b); }
  static Acc ceil_div(const Acc& a, const Acc& b) { return exact::ceil_div(a, b); }
  static bool divides(const Acc& a, const Acc& b) { return b % a == 0; }
  static Integer to_integer(const Acc& v) { return v; }
};

template <typename S>
class Walker {
 public:
  using Coef = typename S::Coef;
  using Acc = typename S::Acc;

  struct Row {
    std::vector<Coef> a;  // coefficients of x_0..x_k
    Coef b;
    bool eq;
  };

  Walker(const Levels& lv, const std::vector<Integer>& lo, const std::vector<Integer>& hi) {
    const std::size_t d = lo.size();
    rows_.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
      for (const IntRow& r : lv.rows[k]) {
        Row row;
        for (std::size_t j = 0; j <= k; ++j) row.a.push_back(S::coef(r.a[j]));
        row.b = S::coef(r.b);
        row.eq = r.eq;
        rows_[k].push_back(std::move(row));
      }
      lo_.push_back(S::coef(lo[k]));
      hi_.push_back(S::coef(hi[k]));
    }
    x_.resize(d);
  }

  // Visits every point (when collect is set) and returns the count.
  Integer run(std::vector<IntVector>* sink) {
    sink_ = sink;
    count_ = 0;
    if (!x_.empty()) descend(0);
    return S::to_integer(count_);
  }

 private:
  bool interval(std::size_t k, Acc& lo, Acc& hi) const {
    lo = lo_[k];
    hi = hi_[k];
    for (const Row& r : rows_[k]) {
      Acc residual = r.b;
      for (std::size_t j = 0; j < k; ++j) residual -= static_cast<Acc>(r.a[j]) * static_cast<Acc>(x_[j]);
      const Acc ak = r.a[k];
      if (r.eq) {
        if (!S::divides(ak, residual)) return false;
        const Acc v = residual / ak;
        if (v < lo || v > hi) return false;
        lo = hi = v;
      } else if (ak > 0) {
        const Acc ub = S::floor_div(residual, ak);
        if (ub < hi) hi = ub;
      } else {
        const Acc lb = S::ceil_div(residual, ak);
        if (lb > lo) lo = lb;
      }
      if (lo > hi) return false;
    }
    return true;
  }

  void descend(std::size_t k) {
    Acc lo, hi;
    if (!interval(k, lo, hi)) return;
    const bool last = k + 1 == x_.size();
    if (last && sink_ == nullptr) {
      count_ += hi - lo + 1;
      return;
    }
    for (Acc v = lo; v <= hi; ++v) {
      x_[k] = static_cast<Coef>(v);
      if (last) {
        ++count_;
        IntVector point;
        point.reserve(x_.size());
        for (const Coef& c : x_) point.push_back(S::to_integer(c));
        sink_->push_back(std::move(point));
      } else {
        descend(k + 1);
      }
    }
  }

  std::vector<std::vector<Row>> rows_;
  std::vector<Coef> lo_, hi_, x_;
  std::vector<IntVector>* sink_ = nullptr;
  Acc count_ = 0;
};

bool fits_fast_path(const Levels& lv, const std::vector<Integer>& lo, const std::vector<Integer>& hi) {
  const Integer limit = Integer(1) << 40;
  auto small = [&](const Integer& x) { return exact::abs(x) <= limit; };
  for (const auto& level : lv.rows)
    for (const IntRow& r : level) {
      if (!small(r.b)) return false;
      for (const Integer& x : r.a)
        if (!small(x)) return false;
    }
  return std::all_of(lo.begin(), lo.end(), small) && std::all_of(hi.begin(), hi.end(), small) &&
         lo.size() < 1000;
}

Integer walk(const HPolytope& p, std::vector<IntVector>* sink) {
  if (p.dim() == 0) {
    if (!contains(p, {})) return 0;
    if (sink != nullptr) sink->emplace_back();
    return 1;
  }
  if (is_empty(p)) return 0;
  const BoundingBox box = bounding_box(p);
  std::vector<Integer> lo, hi;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    lo.push_back(exact::ceil(box.lo[i]));
    hi.push_back(exact::floor(box.hi[i]));
    if (lo.back() > hi.back()) return 0;
  }
  const Levels lv = build_levels(p);
  if (lv.infeasible) return 0;
  if (fits_fast_path(lv, lo, hi)) return Walker<FastScalar>(lv, lo, hi).run(sink);
  return Walker<BigScalar>(lv, lo, hi).run(sink);
}

}  // namespace

std::vector<IntVector> lattice_points(const HPolytope& p) {
  std::vector<IntVector> points;
  walk(p, &points);
  return points;
}

Integer count_lattice_points(const HPolytope& p) { return walk(p, nullptr); }

}  // namespace satip::polytope
