#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chiralkit/geometry.hpp"
#include "chiralkit/rational.hpp"

// Strictly increasing, continuous, piecewise-Mobius maps of the line and
// Z-equivariant lifts of circle maps, with exact rational data.
namespace chiralkit::maps1d {

using geometry::Interval;

/// x -> (a x + b) / (c x + d).
struct MobiusMatrix {
  Rational a{1}, b{0}, c{0}, d{1};

  static MobiusMatrix identity() { return {}; }
  static MobiusMatrix translation(const Rational& t) { return {1, t, 0, 1}; }
  static MobiusMatrix affine(const Rational& slope, const Rational& offset) { return {slope, offset, 0, 1}; }

  Rational det() const { return a * d - b * c; }
  bool is_affine() const { return sgn(c) == 0; }
  /// Slope of an affine matrix.
  Rational slope() const { return a / d; }
  Rational offset() const { return b / d; }

  /// Throws std::domain_error at the pole.
  Rational operator()(const Rational& x) const;
  /// Limit at -inf (sign < 0) or +inf (sign > 0).
  ExtendedRational limit(int sign) const;
  /// Pole -d/c, if any.
  std::optional<Rational> pole() const;

  MobiusMatrix inverse() const { return {d, -b, -c, a}; }
  /// Integer entries, coprime, largest-magnitude entry positive.
  MobiusMatrix canonical() const;
  bool projectively_equal(const MobiusMatrix& other) const;

  std::string str() const;

  friend MobiusMatrix operator*(const MobiusMatrix& g, const MobiusMatrix& f) {
    return {g.a * f.a + g.b * f.c, g.a * f.b + g.b * f.d, g.c * f.a + g.d * f.c, g.c * f.b + g.d * f.d};
  }
  friend bool operator==(const MobiusMatrix&, const MobiusMatrix&) = default;
};

/// A continuous increasing piecewise-Mobius map defined on an open interval.
/// Line embeddings are the case domain = (-inf, +inf).
class PiecewiseMobius {
 public:
  /// Unchecked; see validate().
  PiecewiseMobius(Interval domain, std::vector<Rational> breakpoints, std::vector<MobiusMatrix> pieces);
  explicit PiecewiseMobius(MobiusMatrix single, Interval domain = Interval::whole_line());

  static PiecewiseMobius identity() { return PiecewiseMobius(MobiusMatrix::identity()); }
  static PiecewiseMobius translation(const Rational& t) {
    return PiecewiseMobius(MobiusMatrix::translation(t));
  }
  static PiecewiseMobius affine(const Rational& slope, const Rational& offset) {
    return PiecewiseMobius(MobiusMatrix::affine(slope, offset));
  }

  const Interval& domain() const { return domain_; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<MobiusMatrix>& pieces() const { return pieces_; }
  bool is_line_embedding() const { return domain_ == Interval::whole_line(); }

  std::size_t cell_count() const { return pieces_.size(); }
  Interval cell(std::size_t i) const;
  /// Index of the piece used at x (at a breakpoint the right-hand piece).
  std::size_t piece_index(const Rational& x) const;

  Rational operator()(const Rational& x) const;
  Interval image() const;
  /// Image of a subinterval of the domain.
  Interval image_of(const Interval& sub) const;
  /// Preimage of y in image(); throws std::domain_error outside.
  Rational preimage(const Rational& y) const;

  /// True when every piece whose cell overlaps (lo, hi) is affine.
  bool affine_on(const Rational& lo, const Rational& hi) const;

  std::string str() const;

  friend bool operator==(const PiecewiseMobius&, const PiecewiseMobius&) = default;

 private:
  Interval domain_;
  std::vector<Rational> breakpoints_;
  std::vector<MobiusMatrix> pieces_;
};

using LineEmbedding = PiecewiseMobius;

/// Defect description, or nullopt when valid.
std::optional<std::string> validate(const PiecewiseMobius& f);

/// Canonical matrices, projectively equal neighbours merged.
PiecewiseMobius canonicalize(const PiecewiseMobius& f);

/// Builds a canonical map on `domain` whose matrix on each cell cut out by
/// `candidates` is supplied by `matrix_at` at an interior sample point.
PiecewiseMobius build_piecewise(const Interval& domain, std::vector<Rational> candidates,
                                const std::function<MobiusMatrix(const Rational&)>& matrix_at);

/// g o f. Requires image(f) inside domain(g) (SourceTargetMismatch otherwise).
PiecewiseMobius compose_line(const PiecewiseMobius& g, const PiecewiseMobius& f);
/// Inverse, defined on image(f).
PiecewiseMobius invert_on_image(const PiecewiseMobius& f);
PiecewiseMobius restrict_to(const PiecewiseMobius& f, const Interval& sub);
/// t + f.
PiecewiseMobius translate(const PiecewiseMobius& f, const Rational& t);

/// Canonical two-piece embedding of the line onto `target`.
LineEmbedding chart_onto(const Interval& target);
bool is_surjective(const PiecewiseMobius& f);

/// Embedding of the line onto `target` that is piecewise linear through the
/// given knots (strictly increasing knots and values, values inside target) and
/// Mobius on the two tails.
LineEmbedding pl_core_embedding(const std::vector<Rational>& knots, const std::vector<Rational>& values,
                                const Interval& target);

/// Lift of an orientation preserving circle map: f(x + 1) = f(x) + 1.
class CircleMapLift {
 public:
  /// Unchecked; breakpoints sorted in [0, 1). With no breakpoints the single
  /// piece must be a translation.
  CircleMapLift(std::vector<Rational> breakpoints, std::vector<MobiusMatrix> pieces);

  static CircleMapLift rotation(const Rational& t) { return {{}, {MobiusMatrix::translation(t).canonical()}}; }
  static CircleMapLift identity() { return rotation(0); }

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<MobiusMatrix>& pieces() const { return pieces_; }

  /// Matrix acting near x (any real x; at a breakpoint the right-hand piece).
  MobiusMatrix matrix_at(const Rational& x) const;
  Rational operator()(const Rational& x) const;
  Rational preimage(const Rational& y) const;

  /// The lift restricted to a bounded interval, as a finite piecewise map.
  PiecewiseMobius restricted(const Interval& domain) const;

  std::string str() const;
  friend bool operator==(const CircleMapLift&, const CircleMapLift&) = default;

 private:
  Rational base() const { return breakpoints_.empty() ? Rational(0) : breakpoints_.front(); }

  std::vector<Rational> breakpoints_;
  std::vector<MobiusMatrix> pieces_;
};

std::optional<std::string> validate(const CircleMapLift& g);

/// Canonical lift whose matrices come from `matrix_at` on the cells cut out by
/// `candidates` (reduced mod 1).
CircleMapLift build_lift(std::vector<Rational> candidates,
                         const std::function<MobiusMatrix(const Rational&)>& matrix_at);

CircleMapLift compose_circle(const CircleMapLift& g2, const CircleMapLift& g1);
CircleMapLift invert_lift(const CircleMapLift& g);

/// Lift after a line map (the line map's image must be bounded).
PiecewiseMobius compose_lift_line(const CircleMapLift& g, const PiecewiseMobius& f);

/// A line embedding with bounded image of length <= 1.
class BoundedLineEmbedding {
 public:
  /// Throws PreconditionViolation when the image is unbounded or longer than 1.
  explicit BoundedLineEmbedding(LineEmbedding base);
  const LineEmbedding& base() const { return base_; }
  Interval image() const { return base_.image(); }
  friend bool operator==(const BoundedLineEmbedding&, const BoundedLineEmbedding&) = default;

 private:
  LineEmbedding base_;
};

struct NormalizedPair {
  BoundedLineEmbedding plus;
  BoundedLineEmbedding minus;
  Integer shift;  ///< n with plus = old plus + n, minus = old minus - n
};

/// Unique Z-translate with image(plus).lo in [0, 1).
NormalizedPair normalize_pair_mod_z(const BoundedLineEmbedding& fplus, const BoundedLineEmbedding& fminus);

/// Unique translate of a single bounded embedding with image lo in [0, 1).
std::pair<BoundedLineEmbedding, Integer> normalize_mod_z(const BoundedLineEmbedding& f);

}  // namespace chiralkit::maps1d
