#include "chiralkit/errors.hpp"
#include "chiralkit/localization.hpp"
#include "chiralkit/random.hpp"
#include "chiralkit/sampling.hpp"
#include "common.hpp"

using namespace chiralkit;
using namespace chiralkit::localization;
using maps1d::chart_onto;
using maps1d::PiecewiseMobius;
using skelcat::MtoM;
using test::cone;
using test::iv;
using test::q;

namespace {

std::vector<Point> grid(const DoubleCone& dc, long n) {
  std::vector<Point> out;
  for (const auto& x : test::interior(dc.plus, n))
    for (const auto& y : test::interior(dc.minus, n)) out.push_back({x, y});
  return out;
}

}  // namespace

TEST_CASE("skeletalization") {
  const auto cyl = skeletalize_object(Cylinder{});
  CHECK(cyl.object == skelcat::Obj2::Cylinder);
  CHECK(std::holds_alternative<LiftMaps>(cyl.iso.maps));
  CHECK(apply(cyl.iso, {q("1/3"), q("2/7")}) == Point{q("1/3"), q("2/7")});

  const auto whole = skeletalize_object(Cone{{geometry::Interval::whole_line(), geometry::Interval::whole_line()}});
  const auto& wm = std::get<FactorMaps>(whole.iso.maps);
  CHECK(maps1d::canonicalize(wm.plus) == maps1d::canonicalize(PiecewiseMobius::identity()));
  CHECK(maps1d::canonicalize(wm.minus) == maps1d::canonicalize(PiecewiseMobius::identity()));

  const DoubleCone unit = cone("0", "1", "0", "1");
  const auto s = skeletalize_object(Cone{unit});
  CHECK(std::get<FactorMaps>(s.iso.maps).plus.cell_count() == 2);
  const auto round = compose_c2d(s.inverse, s.iso);
  for (const auto& p : grid(unit, 10)) CHECK(apply(round, p) == p);
  const auto back = compose_c2d(s.iso, s.inverse);
  for (const auto& p : grid(cone("-5", "5", "-5", "5"), 10)) CHECK(apply(back, p) == p);
}

TEST_CASE("make_c2d preconditions") {
  const C2DObject src = Cone{cone("0", "1", "0", "1")};
  const C2DObject dst = Cone{cone("0", "2", "0", "2")};
  const auto dbl = PiecewiseMobius::affine(2, 0);
  CHECK_NOTHROW(make_c2d(src, dst, FactorMaps{maps1d::restrict_to(dbl, iv("0", "1")), maps1d::restrict_to(dbl, iv("0", "1"))}));
  CHECK_THROWS_AS(make_c2d(src, Cone{cone("0", "1", "0", "1")},
                           FactorMaps{maps1d::restrict_to(dbl, iv("0", "1")), maps1d::restrict_to(dbl, iv("0", "1"))}),
                  PreconditionViolation);
  CHECK_THROWS_AS(make_c2d(src, Cylinder{},
                           FactorMaps{maps1d::restrict_to(dbl, iv("0", "1")), maps1d::restrict_to(dbl, iv("0", "1"))}),
                  PreconditionViolation);
  CHECK_THROWS_AS(make_c2d(src, dst, FactorMaps{dbl, dbl}), PreconditionViolation);
}

TEST_CASE("development of fragment morphisms") {
  const DoubleCone unit = cone("0", "1", "0", "1");
  const FragmentMorphism single{geometry::ConeUnion(unit), Cone{unit},
                                MtoM{PiecewiseMobius::identity(), PiecewiseMobius::identity()}};
  const auto d1 = d_localize(single);
  CHECK(std::get<Cone>(d1.source).dc == unit);

  const geometry::ConeUnion u({unit, cone("1/2", "2", "1/2", "2")});
  const skelcat::SkelMorphism2 g = MtoM{PiecewiseMobius::affine(q("1/2"), 3), PiecewiseMobius::translation(-1)};
  const FragmentMorphism f{u, Cone{cone("3", "4", "-1", "1")}, g};
  const auto df = d_localize(f);
  CHECK(std::get<Cone>(df.source).dc == cone("0", "2", "0", "2"));
  for (const auto& p : grid(unit, 10)) CHECK(naturality_holds_at(f, df, p));
  for (const auto& p : grid(cone("1/2", "2", "1/2", "2"), 10)) CHECK(naturality_holds_at(f, df, p));
  CHECK_THROWS(naturality_holds_at(f, df, {q("3/2"), q("1/4")}));

  const FragmentMorphism broken{geometry::ConeUnion({unit, cone("3", "4", "3", "4")}), Cone{unit},
                                MtoM{PiecewiseMobius::identity(), PiecewiseMobius::identity()}};
  CHECK_THROWS_AS(d_localize(broken), DisconnectedProjection);
}

TEST_CASE("cauchy morphisms and inverses") {
  CHECK(is_cauchy_c2d(identity_c2d(Cylinder{})));
  Rng rng(8);
  const auto rot = include_morphism(sampling::random_morphism(rng, skelcat::Obj2::Cylinder, skelcat::Obj2::Cylinder));
  CHECK(is_cauchy_c2d(rot));
  const auto rinv = inverse_c2d(rot);
  for (const auto& p : grid(cone("-1", "1", "-1", "1"), 6)) CHECK(apply(rinv, apply(rot, p)) == p);

  const auto s = sampling::random_surjection(rng);
  const auto surj = include_morphism(MtoM{s, PiecewiseMobius::affine(2, 1)});
  CHECK(is_cauchy_c2d(surj));
  const auto sinv = inverse_c2d(surj);
  for (const auto& p : grid(cone("-4", "4", "-4", "4"), 8)) CHECK(apply(sinv, apply(surj, p)) == p);

  const auto bounded = include_morphism(MtoM{chart_onto(iv("0", "1")), PiecewiseMobius::identity()});
  CHECK_FALSE(is_cauchy_c2d(bounded));
  CHECK_THROWS_AS(inverse_c2d(bounded), PreconditionViolation);
}

TEST_CASE("transport to the skeleton") {
  const DoubleCone src = cone("0", "1", "0", "1");
  const DoubleCone dst = cone("0", "4", "-2", "2");
  const auto f = make_c2d(Cone{src}, Cone{dst},
                          FactorMaps{maps1d::restrict_to(PiecewiseMobius::affine(2, 1), src.plus),
                                     maps1d::restrict_to(PiecewiseMobius::translation(-1), src.minus)});
  const auto m = transport_to_skeleton(f);
  const auto ss = skeletalize_object(Cone{src});
  const auto st = skeletalize_object(Cone{dst});
  const auto lhs = include_morphism(m);
  const auto rhs = compose_c2d(st.iso, compose_c2d(f, ss.inverse));
  for (const auto& p : grid(cone("-6", "6", "-6", "6"), 7)) CHECK(apply(lhs, p) == apply(rhs, p));
}

TEST_CASE("orthogonality of double cone morphisms") {
  auto into = [&](const char* a, const char* b, const char* c, const char* d) {
    return include_morphism(MtoM{chart_onto(iv(a, b)), chart_onto(iv(c, d))});
  };
  CHECK(orthogonal_c2d(into("0", "1", "0", "1"), into("2", "3", "-3", "-2")));
  CHECK_FALSE(orthogonal_c2d(into("0", "1", "0", "1"), into("2", "3", "2", "3")));
  CHECK_THROWS_AS(orthogonal_c2d(into("0", "1", "0", "1"), identity_c2d(Cylinder{})), SourceTargetMismatch);
}
