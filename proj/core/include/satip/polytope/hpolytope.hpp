#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "satip/exact/matrix.hpp"
#include "satip/exact/number.hpp"

namespace satip::polytope {

using exact::Integer;
using exact::IntMatrix;
using exact::IntVector;
using exact::Rational;
using exact::RationalVector;

enum class Relation { LE, LT, EQ };

std::string_view relation_name(Relation rel) noexcept;

struct Constraint {
  RationalVector coeffs;
  Relation relation = Relation::LE;
  Rational rhs;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// { x in Q^dim : every row holds }. Zero rows is the whole space.
class HPolytope {
 public:
  HPolytope() = default;
  explicit HPolytope(std::size_t dim) : dim_(dim) {}
  HPolytope(std::size_t dim, std::vector<Constraint> rows);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Constraint>& rows() const noexcept { return rows_; }

  HPolytope& add(Constraint row);
  HPolytope& add(RationalVector coeffs, Relation rel, Rational rhs) {
    return add(Constraint{std::move(coeffs), rel, std::move(rhs)});
  }
  // Convenience: lo <= x_i <= hi for every coordinate.
  static HPolytope box(const RationalVector& lo, const RationalVector& hi);

  friend bool operator==(const HPolytope&, const HPolytope&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Constraint> rows_;
};

bool contains(const HPolytope& p, const RationalVector& x);

// nP: right-hand sides scaled by n, relations untouched.
HPolytope dilate(const HPolytope& p, const Integer& n);

// Decided by exact simplex; strict rows via a slack-maximisation refinement.
bool is_empty(const HPolytope& p);

// Integerised implicit-equality system C x = d of the affine hull of P.
struct AffineSpan {
  IntMatrix C;
  IntVector d;
};

AffineSpan affine_span(const HPolytope& p);

struct BoundingBox {
  RationalVector lo;
  RationalVector hi;
};

// Coordinate-wise infimum/supremum over the closure of P.
BoundingBox bounding_box(const HPolytope& p);

// All integer points, lexicographically ordered.
std::vector<IntVector> lattice_points(const HPolytope& p);
// Same count as lattice_points(p).size() without materialising the points.
Integer count_lattice_points(const HPolytope& p);

// lcm of the denominators of all vertices of the closure of P (1 if P has
// no vertices). The Ehrhart quasi-polynomial period divides this number.
Integer vertex_denominator_lcm(const HPolytope& p);

}  // namespace satip::polytope
