#pragma once

#include <optional>
#include <vector>

#include "satip/polytope/hpolytope.hpp"

namespace satip::polytope {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector point;
};

// Feasible region of the LE/EQ closure of a polytope (LT rows are read as
// LE). Phase one of the two-phase simplex runs once in the constructor; each
// maximize() call then starts phase two from the stored feasible basis.
// Pivoting follows Bland's rule, so degenerate problems terminate.
class FeasibleRegion {
 public:
  explicit FeasibleRegion(const HPolytope& p);

  bool feasible() const noexcept { return feasible_; }
  std::size_t dim() const noexcept { return dim_; }

  // maximize c.x over the region; status Infeasible if feasible() is false.
  LpResult maximize(const RationalVector& objective) const;
  LpResult minimize(const RationalVector& objective) const;

 private:
  struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;  // structural + slack variables (rhs stored separately)
    std::vector<Rational> a;
    std::vector<Rational> rhs;
    std::vector<std::size_t> basis;

    Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  };

  static void pivot(Tableau& t, std::vector<Rational>& cost, Rational& cost_rhs, std::size_t row,
                    std::size_t col);
  // Runs simplex iterations maximising the objective whose reduced-cost row is
  // `cost`; returns false on unboundedness.
  static bool optimize(Tableau& t, std::vector<Rational>& cost, Rational& cost_rhs,
                       std::size_t usable_cols);

  std::size_t dim_ = 0;
  bool feasible_ = false;
  Tableau tableau_;
};

}  // namespace satip::polytope
