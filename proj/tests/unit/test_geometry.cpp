#include "chiralkit/errors.hpp"
#include "chiralkit/geometry.hpp"
#include "common.hpp"
#include "oracles.hpp"

using namespace chiralkit;
using namespace chiralkit::geometry;
using test::cone;
using test::iv;
using test::q;

TEST_CASE("interval basics") {
  CHECK_THROWS(Interval::parse("1", "1"));
  CHECK_THROWS(Interval::parse("2", "1"));
  const auto i = iv("0", "1");
  CHECK(i.contains(q("1/2")));
  CHECK_FALSE(i.contains(q("0")));
  CHECK_FALSE(i.contains(q("1")));
  CHECK(i.length() == 1);
  CHECK(i.midpoint() == q("1/2"));
  CHECK_THROWS_AS(Interval::whole_line().length(), std::logic_error);
  CHECK(iv("0", "2").intersect(iv("1", "3")) == iv("1", "2"));
  CHECK_FALSE(iv("0", "1").intersect(iv("1", "2")).has_value());
  CHECK_FALSE(iv("0", "1").meets(iv("1", "2")));
  CHECK(iv("-inf", "inf").contains(iv("0", "1")));
}

TEST_CASE("causal future bounds") {
  const auto f = causal_future(cone("0", "1", "0", "1"));
  CHECK(f.plus_bound == ExtendedRational(0));
  CHECK(f.minus_bound == ExtendedRational(0));
  CHECK(f.contains({2, 2}));
  CHECK_FALSE(f.contains({2, -1}));

  const auto g = causal_future(cone("-inf", "1", "0", "1"));
  CHECK(g.plus_bound.is_neg_inf());
  CHECK(g.minus_bound == ExtendedRational(0));
  CHECK(g.contains({-100, q("1/100")}));
  CHECK(g.contains({100, 5}));
}

TEST_CASE("causal past bounds") {
  const auto p = causal_past(cone("0", "1", "0", "1"));
  CHECK(p.plus_bound == ExtendedRational(1));
  CHECK(p.minus_bound == ExtendedRational(1));
  CHECK(p.contains({-1, -1}));
  CHECK_FALSE(p.contains({2, q("1/2")}));

  const auto u = causal_past(cone("0", "inf", "0", "inf"));
  CHECK(u.plus_bound.is_pos_inf());
  CHECK(u.minus_bound.is_pos_inf());
  CHECK(u.contains({1000, -1000}));
}

TEST_CASE("minkowski causal disjointness") {
  const auto a = cone("0", "1", "0", "1");
  CHECK(causally_disjoint_minkowski(a, cone("2", "3", "-3", "-2")));
  CHECK(oracle::grid_disjoint(a, cone("2", "3", "-3", "-2")));
  CHECK_FALSE(causally_disjoint_minkowski(a, cone("2", "3", "2", "3")));
  CHECK_FALSE(oracle::grid_disjoint(a, cone("2", "3", "2", "3")));
  CHECK_FALSE(causally_disjoint_minkowski(a, a));
  // Touching at a null boundary: the open cones stay disjoint.
  CHECK(causally_disjoint_minkowski(a, cone("1", "2", "-1", "0")));
}

TEST_CASE("cylinder causal disjointness") {
  const auto a = cone("0", "1/4", "0", "1/4");
  const auto b = cone("1/2", "3/4", "-3/4", "-1/2");
  CHECK(causally_disjoint_cylinder(a, b));
  CHECK(oracle::enumerated_cylinder_disjoint(a, b, 5));
  CHECK_FALSE(causally_disjoint_cylinder(a, cone("1/2", "3/4", "1/2", "3/4")));
  CHECK_FALSE(causally_disjoint_cylinder(a, a));
  CHECK_THROWS_AS(causally_disjoint_cylinder(a, cone("0", "2", "0", "1")), PreconditionViolation);
  CHECK_THROWS_AS(causally_disjoint_cylinder(a, cone("0", "inf", "0", "1")), PreconditionViolation);
}

TEST_CASE("deck windows agree with the enumeration") {
  const auto a = cone("0", "1/4", "0", "1/4");
  const auto b = cone("1/2", "3/4", "1/2", "3/4");
  const auto w = cylinder_deck_windows(a, b);
  for (long n = -5; n <= 5; ++n) {
    const bool in_window = (w.future_lo < n && n < w.future_hi) || (w.past_lo < n && n < w.past_hi);
    CHECK(in_window == !oracle::grid_disjoint(a, b.deck(Rational(n))));
  }
}

TEST_CASE("cauchy development") {
  CHECK(cauchy_development(ConeUnion(cone("0", "1", "0", "1"))) == cone("0", "1", "0", "1"));
  CHECK(cauchy_development(ConeUnion({cone("0", "1", "0", "1"), cone("1/2", "2", "1/2", "2")})) ==
        cone("0", "2", "0", "2"));
  CHECK_THROWS_AS(cauchy_development(ConeUnion({cone("0", "1", "0", "1"), cone("3", "4", "3", "4")})),
                  DisconnectedProjection);
  CHECK(projection_hull({iv("0", "1"), iv("1/2", "2"), iv("-1", "1/4")}) == iv("-1", "2"));
  CHECK_THROWS_AS(projection_hull({iv("0", "1"), iv("1", "2")}), DisconnectedProjection);
}

TEST_CASE("sampled causal convexity") {
  for (std::uint64_t seed : {0U, 1U, 7U}) {
    CHECK_FALSE(is_causally_convex_sampled(ConeUnion(cone("0", "1", "0", "1")), 200, seed).has_value());
    CHECK_FALSE(
        is_causally_convex_sampled(ConeUnion({cone("0", "2", "0", "1"), cone("1", "3", "0", "1")}), 200, seed)
            .has_value());
  }
  const ConeUnion two({cone("0", "1", "0", "1"), cone("2", "3", "2", "3")});
  const auto ce = is_causally_convex_sampled(two, 500, 0);
  REQUIRE(ce.has_value());
  CHECK(two.contains(ce->earlier));
  CHECK(two.contains(ce->later));
  CHECK_FALSE(two.contains(ce->outside));
  CHECK(ce->earlier.plus <= ce->outside.plus);
  CHECK(ce->outside.plus <= ce->later.plus);
  CHECK(ce->earlier.minus <= ce->outside.minus);
  CHECK(ce->outside.minus <= ce->later.minus);
}

TEST_CASE("uncovered point search") {
  const ConeUnion u({cone("0", "2", "0", "1"), cone("1", "3", "0", "1")});
  CHECK_FALSE(uncovered_point(u, {q("1/2"), q("1/4")}, {q("5/2"), q("3/4")}).has_value());
  const ConeUnion gap({cone("0", "1", "0", "1"), cone("2", "3", "0", "1")});
  const auto p = uncovered_point(gap, {q("1/2"), q("1/2")}, {q("5/2"), q("1/2")});
  REQUIRE(p.has_value());
  CHECK_FALSE(gap.contains(*p));
}
