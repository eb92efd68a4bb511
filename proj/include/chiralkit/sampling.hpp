#pragma once

#include <utility>
#include <vector>

#include "chiralkit/current/observable.hpp"
#include "chiralkit/geometry.hpp"
#include "chiralkit/maps1d.hpp"
#include "chiralkit/random.hpp"
#include "chiralkit/skelcat.hpp"

// Random inputs for property checks. Line embeddings are piecewise linear on
// [-5, 5] with values inside (-5, 5), so chains of them stay affine on the
// probe window [-3, 3] where test functions live.
namespace chiralkit::sampling {

using geometry::DoubleCone;
using geometry::Interval;
using maps1d::CircleMapLift;
using maps1d::LineEmbedding;

/// n distinct sorted rationals strictly inside the bounded interval (lo, hi),
/// on the grid of step (hi - lo) / grid.
std::vector<Rational> sorted_inside(Rng& rng, std::size_t n, const Rational& lo, const Rational& hi, long grid = 64);

/// Bounded interval with endpoints on the grid 1/den in [lo, hi].
Interval random_interval(Rng& rng, long lo, long hi, long den);
/// Bounded, half-line or whole-line target meeting (-4, 4) in length >= 1/2.
Interval random_target(Rng& rng);
DoubleCone random_cone(Rng& rng, long lo, long hi, long den);

/// PL on [-5, 5] (2 to 4 knots), Mobius tails, image exactly `target`.
LineEmbedding random_embedding(Rng& rng, const Interval& target);
/// Surjective and affine everywhere (translation tails).
LineEmbedding random_surjection(Rng& rng);

/// Lift that is affine between knots: knots[i] -> values[i], extended by
/// x + 1 -> f(x) + 1. Knots in [0, 1), values strictly increasing and below values[0] + 1.
CircleMapLift pl_lift(const std::vector<Rational>& knots, const std::vector<Rational>& values);
CircleMapLift random_lift(Rng& rng);

/// Random morphism between the given objects (throws for Cylinder -> Minkowski).
skelcat::SkelMorphism2 random_morphism(Rng& rng, skelcat::Obj2 source, skelcat::Obj2 target);
skelcat::SkelMorphism1 random_morphism1(Rng& rng, skelcat::Obj1 source, skelcat::Obj1 target);
/// M -> M with image exactly the given cone.
skelcat::SkelMorphism2 morphism_onto(Rng& rng, const DoubleCone& image);

current::LineFn random_line_fn(Rng& rng, const Rational& lo, const Rational& hi, bool continuous = false);
current::CircleFn random_circle_fn(Rng& rng, bool continuous = false);
current::Observable random_observable(Rng& rng, skelcat::Obj2 ambient);

using Pair2 = std::pair<skelcat::SkelMorphism2, skelcat::SkelMorphism2>;

/// (g, f) with target(f) = source(g), cycling through every composable type combination.
std::vector<Pair2> composable_pairs(Rng& rng, std::size_t n);
/// Orthogonal pairs with a common target, alternating M and M/Z targets.
std::vector<Pair2> orthogonal_pairs(Rng& rng, std::size_t n);
/// Pairs with a common target, orthogonal or not.
std::vector<Pair2> cotarget_pairs(Rng& rng, std::size_t n);
/// Surjective M -> M morphisms and cylinder automorphisms, alternating.
std::vector<skelcat::SkelMorphism2> cauchy_morphisms(Rng& rng, std::size_t n);
/// Endomorphisms of R (translations and PL surjections) and of T (rotations
/// and PL lifts), alternating.
std::vector<skelcat::SkelMorphism1> chirality_witnesses(Rng& rng, std::size_t n);

}  // namespace chiralkit::sampling
