#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chiralkit/rational.hpp"

// Lightcone geometry of the Minkowski plane (x+, x-) and the flat cylinder,
// which is the quotient by (x+, x-) ~ (x+ + n, x- - n). Everything is exact.
namespace chiralkit::geometry {

/// Nonempty open interval (lo, hi). Construction with lo >= hi throws.
class Interval {
 public:
  Interval(ExtendedRational lo, ExtendedRational hi);

  static Interval whole_line() {
    return {ExtendedRational::neg_inf(), ExtendedRational::pos_inf()};
  }
  static Interval parse(std::string_view lo, std::string_view hi) {
    return {ExtendedRational::parse(lo), ExtendedRational::parse(hi)};
  }

  const ExtendedRational& lo() const { return lo_; }
  const ExtendedRational& hi() const { return hi_; }

  bool is_bounded() const { return lo_.is_finite() && hi_.is_finite(); }
  bool contains(const Rational& x) const;
  bool contains(const Interval& other) const;
  bool meets(const Interval& other) const;

  /// Length of a bounded interval; throws std::logic_error otherwise.
  Rational length() const;
  /// Midpoint of a bounded interval.
  Rational midpoint() const;

  Interval shifted(const Rational& t) const { return {lo_.shifted(t), hi_.shifted(t)}; }
  std::optional<Interval> intersect(const Interval& other) const;

  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  ExtendedRational lo_;
  ExtendedRational hi_;
};

/// A point in lightcone coordinates.
struct Point {
  Rational plus;
  Rational minus;
  friend bool operator==(const Point&, const Point&) = default;
};

/// The product set I+ x I- of two open intervals.
struct DoubleCone {
  Interval plus;
  Interval minus;

  bool contains(const Point& p) const { return plus.contains(p.plus) && minus.contains(p.minus); }
  bool contains(const DoubleCone& other) const {
    return plus.contains(other.plus) && minus.contains(other.minus);
  }
  /// Translation by the cylinder deck transformation (x+ + n, x- - n).
  DoubleCone deck(const Rational& n) const { return {plus.shifted(n), minus.shifted(-n)}; }

  std::string str() const { return plus.str() + " x " + minus.str(); }
  friend bool operator==(const DoubleCone&, const DoubleCone&) = default;
};

/// Strict bounds describing J+ (future) or J- (past) of a double cone.
struct WedgeConstraint {
  enum class Direction : std::uint8_t { Future, Past };
  Direction direction;
  ExtendedRational plus_bound;
  ExtendedRational minus_bound;

  bool contains(const Point& p) const;
};

/// Finite union of double cones; members may overlap.
class ConeUnion {
 public:
  explicit ConeUnion(std::vector<DoubleCone> cones);
  ConeUnion(DoubleCone cone) : ConeUnion(std::vector<DoubleCone>{std::move(cone)}) {}

  const std::vector<DoubleCone>& cones() const { return cones_; }
  bool contains(const Point& p) const;
  std::string str() const;

 private:
  std::vector<DoubleCone> cones_;
};

WedgeConstraint causal_future(const DoubleCone& dc);
WedgeConstraint causal_past(const DoubleCone& dc);

/// True iff neither J+(a) nor J-(a) meets b.
bool causally_disjoint_minkowski(const DoubleCone& a, const DoubleCone& b);

/// Causal disjointness in the cylinder: a against every deck translate of b.
/// Both cones must have bounded factors of length <= 1 (PreconditionViolation otherwise).
bool causally_disjoint_cylinder(const DoubleCone& a, const DoubleCone& b);

/// Open rational intervals of deck indices n for which J+(a), resp. J-(a), meets
/// b translated by (n, -n). Exposed for tests.
struct DeckWindows {
  Rational future_lo, future_hi;
  Rational past_lo, past_hi;
};
DeckWindows cylinder_deck_windows(const DoubleCone& a, const DoubleCone& b);

/// Union of the projections, as a single open interval. Throws DisconnectedProjection.
Interval projection_hull(const std::vector<Interval>& pieces);

/// D(U) = pr+(U) x pr-(U).
DoubleCone cauchy_development(const ConeUnion& region);

struct ConvexityCounterexample {
  Point earlier;
  Point later;
  Point outside;  ///< a point of the causal diamond [earlier, later] not in the region
};

/// Randomized causal-convexity test. A returned counterexample is exact; an
/// empty result means none was found in sample_count draws.
std::optional<ConvexityCounterexample> is_causally_convex_sampled(const ConeUnion& region,
                                                                  int sample_count,
                                                                  std::uint64_t seed);

/// Exact search for a point of the closed box [p, q] not covered by the region.
std::optional<Point> uncovered_point(const ConeUnion& region, const Point& p, const Point& q);

}  // namespace chiralkit::geometry
