#include "chiralkit/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "chiralkit/errors.hpp"
#include "chiralkit/random.hpp"

namespace chiralkit::geometry {

Interval::Interval(ExtendedRational lo, ExtendedRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) {
    throw std::invalid_argument("empty interval (" + lo_.str() + ", " + hi_.str() + ")");
  }
}

bool Interval::contains(const Rational& x) const {
  const ExtendedRational e(x);
  return lo_ < e && e < hi_;
}

bool Interval::contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

bool Interval::meets(const Interval& other) const { return lo_ < other.hi_ && other.lo_ < hi_; }

Rational Interval::length() const {
  if (!is_bounded()) throw std::logic_error("length of unbounded interval " + str());
  return hi_.value() - lo_.value();
}

Rational Interval::midpoint() const {
  if (!is_bounded()) throw std::logic_error("midpoint of unbounded interval " + str());
  return (lo_.value() + hi_.value()) / 2;
}

std::optional<Interval> Interval::intersect(const Interval& other) const {
  const auto& lo = std::max(lo_, other.lo_);
  const auto& hi = std::min(hi_, other.hi_);
  if (!(lo < hi)) return std::nullopt;
  return Interval(lo, hi);
}

std::string Interval::str() const { return "(" + lo_.str() + ", " + hi_.str() + ")"; }

bool WedgeConstraint::contains(const Point& p) const {
  const ExtendedRational xp(p.plus);
  const ExtendedRational xm(p.minus);
  if (direction == Direction::Future) return xp > plus_bound && xm > minus_bound;
  return xp < plus_bound && xm < minus_bound;
}

ConeUnion::ConeUnion(std::vector<DoubleCone> cones) : cones_(std::move(cones)) {
  if (cones_.empty()) throw std::invalid_argument("empty cone union");
}

bool ConeUnion::contains(const Point& p) const {
  return std::any_of(cones_.begin(), cones_.end(), [&](const DoubleCone& c) { return c.contains(p); });
}

std::string ConeUnion::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    if (i) out += ", ";
    out += cones_[i].str();
  }
  return out + "}";
}

WedgeConstraint causal_future(const DoubleCone& dc) {
  return {WedgeConstraint::Direction::Future, dc.plus.lo(), dc.minus.lo()};
}

WedgeConstraint causal_past(const DoubleCone& dc) {
  return {WedgeConstraint::Direction::Past, dc.plus.hi(), dc.minus.hi()};
}

bool causally_disjoint_minkowski(const DoubleCone& a, const DoubleCone& b) {
  const bool future_meets = b.plus.hi() > a.plus.lo() && b.minus.hi() > a.minus.lo();
  const bool past_meets = b.plus.lo() < a.plus.hi() && b.minus.lo() < a.minus.hi();
  return !future_meets && !past_meets;
}

namespace {

void require_unit_bounded(const DoubleCone& dc) {
  for (const Interval* f : {&dc.plus, &dc.minus}) {
    if (!f->is_bounded() || f->length() > 1) {
      throw PreconditionViolation("cylinder disjointness needs factors of length <= 1, got " + dc.str());
    }
  }
}

// Some integer n with lo < n < hi.
bool open_interval_has_integer(const Rational& lo, const Rational& hi) {
  return Rational(floor_of(lo) + 1) < hi;
}

}  // namespace

DeckWindows cylinder_deck_windows(const DoubleCone& a, const DoubleCone& b) {
  const auto& lo1p = a.plus.lo().value();
  const auto& hi1p = a.plus.hi().value();
  const auto& lo1m = a.minus.lo().value();
  const auto& hi1m = a.minus.hi().value();
  const auto& lo2p = b.plus.lo().value();
  const auto& hi2p = b.plus.hi().value();
  const auto& lo2m = b.minus.lo().value();
  const auto& hi2m = b.minus.hi().value();
  return {lo1p - hi2p, hi2m - lo1m, lo2m - hi1m, hi1p - lo2p};
}

bool causally_disjoint_cylinder(const DoubleCone& a, const DoubleCone& b) {
  require_unit_bounded(a);
  require_unit_bounded(b);
  const DeckWindows w = cylinder_deck_windows(a, b);
  return !open_interval_has_integer(w.future_lo, w.future_hi) &&
         !open_interval_has_integer(w.past_lo, w.past_hi);
}

Interval projection_hull(const std::vector<Interval>& pieces) {
  if (pieces.empty()) throw std::invalid_argument("projection of an empty region");
  std::vector<Interval> sorted = pieces;
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval& x, const Interval& y) { return x.lo() < y.lo(); });
  ExtendedRational lo = sorted.front().lo();
  ExtendedRational hi = sorted.front().hi();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    // Open intervals that merely touch leave their common endpoint uncovered.
    if (!(sorted[i].lo() < hi)) {
      throw DisconnectedProjection("projection has a gap at " + hi.str());
    }
    hi = std::max(hi, sorted[i].hi());
  }
  return {lo, hi};
}

DoubleCone cauchy_development(const ConeUnion& region) {
  std::vector<Interval> plus;
  std::vector<Interval> minus;
  for (const auto& c : region.cones()) {
    plus.push_back(c.plus);
    minus.push_back(c.minus);
  }
  return {projection_hull(plus), projection_hull(minus)};
}

namespace {

std::vector<Rational> probe_coordinates(const Rational& lo, const Rational& hi,
                                        const std::set<Rational>& cuts) {
  std::vector<Rational> crit{lo};
  for (const auto& c : cuts) {
    if (c > lo && c < hi) crit.push_back(c);
  }
  crit.push_back(hi);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    out.push_back(crit[i]);
    if (i + 1 < crit.size()) out.push_back((crit[i] + crit[i + 1]) / 2);
  }
  return out;
}

// Finite stand-in for sampling inside a possibly unbounded interval.
std::pair<Rational, Rational> sampling_window(const Interval& iv) {
  constexpr long kReach = 4;
  if (iv.is_bounded()) return {iv.lo().value(), iv.hi().value()};
  if (iv.lo().is_finite()) return {iv.lo().value(), iv.lo().value() + kReach};
  if (iv.hi().is_finite()) return {iv.hi().value() - kReach, iv.hi().value()};
  return {Rational(-kReach), Rational(kReach)};
}

Rational sample_open(Rng& rng, const Interval& iv) {
  constexpr long kGrid = 64;
  const auto [lo, hi] = sampling_window(iv);
  return lo + (hi - lo) * ratio(rng.uniform_int(1, kGrid - 1), kGrid);
}

}  // namespace

std::optional<Point> uncovered_point(const ConeUnion& region, const Point& p, const Point& q) {
  std::set<Rational> plus_cuts;
  std::set<Rational> minus_cuts;
  for (const auto& c : region.cones()) {
    for (const auto* e : {&c.plus.lo(), &c.plus.hi()}) {
      if (e->is_finite()) plus_cuts.insert(e->value());
    }
    for (const auto* e : {&c.minus.lo(), &c.minus.hi()}) {
      if (e->is_finite()) minus_cuts.insert(e->value());
    }
  }
  const auto xs = probe_coordinates(p.plus, q.plus, plus_cuts);
  const auto ys = probe_coordinates(p.minus, q.minus, minus_cuts);
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      Point r{x, y};
      if (!region.contains(r)) return r;
    }
  }
  return std::nullopt;
}

std::optional<ConvexityCounterexample> is_causally_convex_sampled(const ConeUnion& region,
                                                                  int sample_count,
                                                                  std::uint64_t seed) {
  if (sample_count <= 0) throw std::invalid_argument("sample_count must be positive");
  Rng rng(seed);
  const auto& cones = region.cones();
  const auto last = static_cast<std::int64_t>(cones.size()) - 1;
  auto draw = [&] {
    const auto& c = cones[static_cast<std::size_t>(rng.uniform_int(0, last))];
    return Point{sample_open(rng, c.plus), sample_open(rng, c.minus)};
  };
  for (int i = 0; i < sample_count; ++i) {
    Point p = draw();
    Point q = draw();
    if (p.plus > q.plus || (p.plus == q.plus && p.minus > q.minus)) std::swap(p, q);
    if (!(p.minus <= q.minus)) continue;  // spacelike pair, no diamond
    if (auto bad = uncovered_point(region, p, q)) return ConvexityCounterexample{p, q, *bad};
  }
  return std::nullopt;
}

}  // namespace chiralkit::geometry
