#include "chiralkit/sampling.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "chiralkit/errors.hpp"

namespace chiralkit::sampling {

using current::CircleFn;
using current::LineFn;
using current::Observable;
using maps1d::MobiusMatrix;
using skelcat::Obj1;
using skelcat::Obj2;

std::vector<Rational> sorted_inside(Rng& rng, std::size_t n, const Rational& lo, const Rational& hi, long grid) {
  if (static_cast<long>(n) > grid - 1) throw std::invalid_argument("grid too coarse");
  std::set<long> picks;
  while (picks.size() < n) picks.insert(rng.uniform_int(1, grid - 1));
  std::vector<Rational> out;
  for (long k : picks) out.push_back(lo + (hi - lo) * ratio(k, grid));
  return out;
}

Interval random_interval(Rng& rng, long lo, long hi, long den) {
  Rational a = rng.grid_rational(lo, hi, den);
  Rational b = rng.grid_rational(lo, hi, den);
  while (a == b) b = rng.grid_rational(lo, hi, den);
  if (b < a) std::swap(a, b);
  return {a, b};
}

Interval random_target(Rng& rng) {
  switch (rng.uniform_int(0, 3)) {
    case 0:
      return Interval::whole_line();
    case 1:
      return {rng.grid_rational(-4, 3, 4), ExtendedRational::pos_inf()};
    case 2:
      return {ExtendedRational::neg_inf(), rng.grid_rational(-3, 4, 4)};
    default: {
      Interval i = random_interval(rng, -4, 4, 4);
      while (i.length() < ratio(1, 2)) i = random_interval(rng, -4, 4, 4);
      return i;
    }
  }
}

DoubleCone random_cone(Rng& rng, long lo, long hi, long den) {
  return {random_interval(rng, lo, hi, den), random_interval(rng, lo, hi, den)};
}

namespace {

/// The part of the target used for core values: target cut to (-5, 5).
Interval value_window(const Interval& target) {
  if (auto w = target.intersect(Interval(-5, 5))) return *w;
  throw PreconditionViolation("target " + target.str() + " misses (-5, 5)");
}

std::vector<Rational> core_knots(Rng& rng, std::size_t n) {
  std::vector<Rational> k{Rational(-5)};
  for (const auto& x : sorted_inside(rng, n - 2, -5, 5, 20)) k.push_back(x);
  k.push_back(5);
  return k;
}

}  // namespace

LineEmbedding random_embedding(Rng& rng, const Interval& target) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 4));
  const Interval w = value_window(target);
  return maps1d::pl_core_embedding(core_knots(rng, n), sorted_inside(rng, n, w.lo().value(), w.hi().value()),
                                   target);
}

LineEmbedding random_surjection(Rng& rng) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 4));
  return maps1d::pl_core_embedding(core_knots(rng, n), sorted_inside(rng, n, -5, 5), Interval::whole_line());
}

CircleMapLift pl_lift(const std::vector<Rational>& knots, const std::vector<Rational>& values) {
  const std::size_t k = knots.size();
  auto matrix_at = [&](const Rational& x) {
    const Rational n(floor_of(Rational(x - knots[0])));
    const Rational y = x - n;
    std::size_t i = k - 1;
    while (i > 0 && knots[i] > y) --i;
    const Rational x0 = knots[i];
    const Rational y0 = values[i];
    const Rational x1 = i + 1 < k ? knots[i + 1] : Rational(knots[0] + 1);
    const Rational y1 = i + 1 < k ? values[i + 1] : Rational(values[0] + 1);
    const Rational s = (y1 - y0) / (x1 - x0);
    const MobiusMatrix a = MobiusMatrix::affine(s, y0 - s * x0);
    return MobiusMatrix::translation(n) * a * MobiusMatrix::translation(-n);
  };
  return maps1d::build_lift(knots, matrix_at);
}

CircleMapLift random_lift(Rng& rng) {
  const std::size_t k = static_cast<std::size_t>(rng.uniform_int(1, 3));
  const auto knots = sorted_inside(rng, k, -ratio(1, 16), 1, 17);
  const Rational c0 = rng.grid_rational(-1, 1, 8);
  std::vector<Rational> values{c0};
  for (const auto& v : sorted_inside(rng, k - 1, c0, c0 + 1, 16)) values.push_back(v);
  return pl_lift(knots, values);
}

skelcat::SkelMorphism2 random_morphism(Rng& rng, Obj2 source, Obj2 target) {
  if (source == Obj2::Cylinder) {
    if (target == Obj2::Minkowski) throw SourceTargetMismatch("there are no morphisms from M/Z to M");
    return skelcat::CylToCyl{random_lift(rng), random_lift(rng)};
  }
  if (target == Obj2::Minkowski) {
    return skelcat::MtoM{random_embedding(rng, random_target(rng)), random_embedding(rng, random_target(rng))};
  }
  const Interval a = random_interval(rng, -2, 2, 8);
  const Interval b = random_interval(rng, -2, 2, 8);
  auto fit = [](const Interval& i) {
    return i.length() <= 1 ? i : Interval(i.lo(), Rational(i.lo().value() + 1));
  };
  return skelcat::make_mto_cyl(random_embedding(rng, fit(a)), random_embedding(rng, fit(b)));
}

skelcat::SkelMorphism1 random_morphism1(Rng& rng, Obj1 source, Obj1 target) {
  if (source == Obj1::Circle) {
    if (target == Obj1::Line) throw SourceTargetMismatch("there are no morphisms from T to R");
    return skelcat::CircleToCircle{random_lift(rng)};
  }
  if (target == Obj1::Line) return skelcat::LineToLine{random_embedding(rng, random_target(rng))};
  Interval a = random_interval(rng, -2, 2, 8);
  if (a.length() > 1) a = Interval(a.lo(), Rational(a.lo().value() + 1));
  return skelcat::make_line_to_circle(random_embedding(rng, a));
}

skelcat::SkelMorphism2 morphism_onto(Rng& rng, const DoubleCone& image) {
  return skelcat::MtoM{random_embedding(rng, image.plus), random_embedding(rng, image.minus)};
}

LineFn random_line_fn(Rng& rng, const Rational& lo, const Rational& hi, bool continuous) {
  const auto pts = sorted_inside(rng, 3, lo, hi, 48);
  const Rational height = ratio(rng.uniform_int(1, 8), rng.uniform_int(1, 4)) * (rng.coin() ? 1 : -1);
  const int kind = static_cast<int>(rng.uniform_int(0, continuous ? 1 : 2));
  if (kind == 0) return LineFn::triangle(pts[0], pts[1], pts[2], height);
  if (kind == 1) return LineFn::quartic_bump(pts[0], pts[2], height);
  return LineFn::indicator(pts[0], pts[2], height) + LineFn::triangle(pts[0], pts[1], pts[2]);
}

CircleFn random_circle_fn(Rng& rng, bool continuous) {
  const Rational lo = rng.grid_rational(-1, 1, 8) / 2;
  const Rational len = ratio(rng.uniform_int(2, 8), 8);
  return CircleFn::fold(random_line_fn(rng, lo, Rational(lo + len), continuous));
}

Observable random_observable(Rng& rng, Obj2 ambient) {
  auto line = [&]() { return rng.uniform_int(0, 3) == 0 ? LineFn{} : random_line_fn(rng, -3, 3); };
  if (ambient == Obj2::Minkowski) return {ambient, line(), line()};
  auto circle = [&]() -> CircleFn {
    switch (rng.uniform_int(0, 4)) {
      case 0:
        return CircleFn{};
      case 1:
        return CircleFn(ratio(rng.uniform_int(-4, 4), 2));
      default:
        return random_circle_fn(rng);
    }
  };
  return {ambient, circle(), circle()};
}

}  // namespace chiralkit::sampling

namespace chiralkit::sampling {

std::vector<Pair2> composable_pairs(Rng& rng, std::size_t n) {
  static const std::array<std::array<Obj2, 3>, 4> shapes{{{Obj2::Minkowski, Obj2::Minkowski, Obj2::Minkowski},
                                                          {Obj2::Minkowski, Obj2::Minkowski, Obj2::Cylinder},
                                                          {Obj2::Minkowski, Obj2::Cylinder, Obj2::Cylinder},
                                                          {Obj2::Cylinder, Obj2::Cylinder, Obj2::Cylinder}}};
  std::vector<Pair2> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = shapes[i % shapes.size()];
    auto f = random_morphism(rng, s[0], s[1]);
    auto g = random_morphism(rng, s[1], s[2]);
    out.emplace_back(std::move(g), std::move(f));
  }
  return out;
}

std::vector<Pair2> orthogonal_pairs(Rng& rng, std::size_t n) {
  std::vector<Pair2> out;
  while (out.size() < n) {
    if (out.size() % 2 == 0) {
      const DoubleCone a = random_cone(rng, -3, 3, 4);
      const DoubleCone b = random_cone(rng, -3, 3, 4);
      if (!geometry::causally_disjoint_minkowski(a, b)) continue;
      out.emplace_back(morphism_onto(rng, a), morphism_onto(rng, b));
    } else {
      // Short factors; with factors up to length 1 disjoint pairs are rare.
      auto cone = [&]() {
        auto factor = [&]() {
          const Rational lo = rng.grid_rational(-2, 2, 8);
          return Interval(lo, Rational(lo + ratio(rng.uniform_int(1, 3), 8)));
        };
        return DoubleCone{factor(), factor()};
      };
      const DoubleCone a = cone();
      const DoubleCone b = cone();
      if (!geometry::causally_disjoint_cylinder(a, b)) continue;
      out.emplace_back(skelcat::make_mto_cyl(random_embedding(rng, a.plus), random_embedding(rng, a.minus)),
                       skelcat::make_mto_cyl(random_embedding(rng, b.plus), random_embedding(rng, b.minus)));
    }
  }
  return out;
}

std::vector<Pair2> cotarget_pairs(Rng& rng, std::size_t n) {
  static const std::array<std::array<Obj2, 3>, 4> shapes{{{Obj2::Minkowski, Obj2::Minkowski, Obj2::Minkowski},
                                                          {Obj2::Minkowski, Obj2::Minkowski, Obj2::Cylinder},
                                                          {Obj2::Minkowski, Obj2::Cylinder, Obj2::Cylinder},
                                                          {Obj2::Cylinder, Obj2::Minkowski, Obj2::Cylinder}}};
  std::vector<Pair2> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = shapes[i % shapes.size()];
    if (i % 3 == 0) {
      // Bias toward orthogonal pairs so both verdicts occur.
      auto p = orthogonal_pairs(rng, (i / 3) % 2 + 1);
      out.push_back(std::move(p.back()));
      continue;
    }
    out.emplace_back(random_morphism(rng, s[0], s[2]), random_morphism(rng, s[1], s[2]));
  }
  return out;
}

std::vector<skelcat::SkelMorphism2> cauchy_morphisms(Rng& rng, std::size_t n) {
  std::vector<skelcat::SkelMorphism2> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 2 == 0) {
      out.push_back(skelcat::MtoM{random_surjection(rng), random_surjection(rng)});
    } else {
      out.push_back(skelcat::CylToCyl{random_lift(rng), random_lift(rng)});
    }
  }
  return out;
}

std::vector<skelcat::SkelMorphism1> chirality_witnesses(Rng& rng, std::size_t n) {
  static const std::array<long, 6> primes{5, 7, 11, 13, 17, 19};
  std::vector<skelcat::SkelMorphism1> out;
  for (std::size_t i = 0; i < n; ++i) {
    switch (i % 4) {
      case 0: {
        Rational t = rng.grid_rational(-3, 3, 4);
        if (sgn(t) == 0) t = 7;
        out.push_back(skelcat::LineToLine{LineEmbedding::translation(t)});
        break;
      }
      case 1:
        out.push_back(skelcat::LineToLine{random_surjection(rng)});
        break;
      case 2: {
        const long q = primes[(i / 4) % primes.size()];
        out.push_back(skelcat::CircleToCircle{CircleMapLift::rotation(ratio(rng.uniform_int(1, q - 1), q))});
        break;
      }
      default:
        out.push_back(skelcat::CircleToCircle{random_lift(rng)});
    }
  }
  return out;
}

}  // namespace chiralkit::sampling
