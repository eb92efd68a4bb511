#include "chiralkit/maps1d.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "chiralkit/errors.hpp"

namespace chiralkit::maps1d {

// ---------------------------------------------------------------- MobiusMatrix

Rational MobiusMatrix::operator()(const Rational& x) const {
  const Rational den = c * x + d;
  if (sgn(den) == 0) throw std::domain_error("Mobius map evaluated at its pole " + to_string(x));
  return (a * x + b) / den;
}

ExtendedRational MobiusMatrix::limit(int sign) const {
  if (sgn(c) != 0) return ExtendedRational(Rational(a / c));
  // Affine with positive slope.
  const bool rising = sgn(a) * sgn(d) > 0;
  if ((sign > 0) == rising) return ExtendedRational::pos_inf();
  return ExtendedRational::neg_inf();
}

std::optional<Rational> MobiusMatrix::pole() const {
  if (sgn(c) == 0) return std::nullopt;
  return Rational(-d / c);
}

MobiusMatrix MobiusMatrix::canonical() const {
  std::array<Rational, 4> e{a, b, c, d};
  Integer den = 1;
  for (const auto& x : e) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::array<Integer, 4> n;
  Integer g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    n[i] = e[i].get_num() * (den / e[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
  }
  if (sgn(g) == 0) throw std::domain_error("zero matrix");
  std::size_t lead = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (abs(n[i]) > abs(n[lead])) lead = i;
  }
  if (sgn(n[lead]) < 0) g = -g;
  for (auto& x : n) x /= g;
  return {Rational(n[0]), Rational(n[1]), Rational(n[2]), Rational(n[3])};
}

bool MobiusMatrix::projectively_equal(const MobiusMatrix& other) const {
  return canonical() == other.canonical();
}

std::string MobiusMatrix::str() const {
  return "[" + to_string(a) + ", " + to_string(b) + "; " + to_string(c) + ", " + to_string(d) + "]";
}

// ------------------------------------------------------------- PiecewiseMobius

PiecewiseMobius::PiecewiseMobius(Interval domain, std::vector<Rational> breakpoints,
                                 std::vector<MobiusMatrix> pieces)
    : domain_(std::move(domain)), breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.size() != breakpoints_.size() + 1) {
    throw std::invalid_argument("piecewise map needs one piece per cell");
  }
}

PiecewiseMobius::PiecewiseMobius(MobiusMatrix single, Interval domain)
    : domain_(std::move(domain)), pieces_{single.canonical()} {}

Interval PiecewiseMobius::cell(std::size_t i) const {
  const ExtendedRational lo = i == 0 ? domain_.lo() : ExtendedRational(breakpoints_[i - 1]);
  const ExtendedRational hi = i + 1 == pieces_.size() ? domain_.hi() : ExtendedRational(breakpoints_[i]);
  return {lo, hi};
}

std::size_t PiecewiseMobius::piece_index(const Rational& x) const {
  return static_cast<std::size_t>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) -
                                  breakpoints_.begin());
}

Rational PiecewiseMobius::operator()(const Rational& x) const {
  const ExtendedRational e(x);
  if (e < domain_.lo() || e > domain_.hi()) {
    throw std::domain_error("point " + to_string(x) + " outside domain " + domain_.str());
  }
  return pieces_[piece_index(x)](x);
}

namespace {

ExtendedRational value_at(const PiecewiseMobius& f, const ExtendedRational& x, int side) {
  const auto& m = side < 0 ? f.pieces().front() : f.pieces().back();
  if (!x.is_finite()) return m.limit(side);
  const bool at_edge = side < 0 ? x == f.domain().lo() : x == f.domain().hi();
  if (!at_edge) return ExtendedRational(f(x.value()));
  // One-sided limit at an endpoint of the domain, possibly the pole of the end piece.
  if (m.pole() && *m.pole() == x.value()) {
    return side < 0 ? ExtendedRational::neg_inf() : ExtendedRational::pos_inf();
  }
  return ExtendedRational(m(x.value()));
}

}  // namespace

Interval PiecewiseMobius::image() const { return image_of(domain_); }

Interval PiecewiseMobius::image_of(const Interval& sub) const {
  if (!domain_.contains(sub)) {
    throw std::domain_error("interval " + sub.str() + " outside domain " + domain_.str());
  }
  return {value_at(*this, sub.lo(), -1), value_at(*this, sub.hi(), +1)};
}

Rational PiecewiseMobius::preimage(const Rational& y) const {
  const Interval img = image();
  const ExtendedRational e(y);
  if (e < img.lo() || e > img.hi()) {
    throw std::domain_error("point " + to_string(y) + " outside image " + img.str());
  }
  std::size_t idx = 0;
  while (idx < breakpoints_.size() && (*this)(breakpoints_[idx]) <= y) ++idx;
  return pieces_[idx].inverse()(y);
}

bool PiecewiseMobius::affine_on(const Rational& lo, const Rational& hi) const {
  const ExtendedRational elo(lo);
  const ExtendedRational ehi(hi);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Interval c = cell(i);
    if (c.lo() < ehi && elo < c.hi() && !pieces_[i].is_affine()) return false;
  }
  return true;
}

std::string PiecewiseMobius::str() const {
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += " | ";
    out += cell(i).str() + " " + pieces_[i].str();
  }
  return out;
}

std::optional<std::string> validate(const PiecewiseMobius& f) {
  const auto& bp = f.breakpoints();
  for (std::size_t i = 0; i < bp.size(); ++i) {
    if (!f.domain().contains(bp[i])) return "breakpoint " + to_string(bp[i]) + " outside the domain";
    if (i && !(bp[i - 1] < bp[i])) return "breakpoints not strictly increasing";
  }
  for (std::size_t i = 0; i < f.cell_count(); ++i) {
    const auto& m = f.pieces()[i];
    if (sgn(m.det()) <= 0) return "determinant <= 0 on piece " + std::to_string(i);
    if (auto p = m.pole()) {
      const Interval c = f.cell(i);
      const ExtendedRational ep(*p);
      if (c.lo() <= ep && ep <= c.hi()) {
        return "pole " + to_string(*p) + " in the closure of cell " + c.str();
      }
    }
  }
  for (std::size_t i = 0; i < bp.size(); ++i) {
    if (f.pieces()[i](bp[i]) != f.pieces()[i + 1](bp[i])) {
      return "discontinuity at " + to_string(bp[i]);
    }
  }
  return std::nullopt;
}

namespace {

Rational sample_point(const Interval& c) {
  if (c.is_bounded()) return c.midpoint();
  if (c.lo().is_finite()) return c.lo().value() + 1;
  if (c.hi().is_finite()) return c.hi().value() - 1;
  return 0;
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

PiecewiseMobius build_piecewise(const Interval& domain, std::vector<Rational> candidates,
                                const std::function<MobiusMatrix(const Rational&)>& matrix_at) {
  std::erase_if(candidates, [&](const Rational& x) { return !domain.contains(x); });
  sort_unique(candidates);
  std::vector<Rational> breaks;
  std::vector<MobiusMatrix> pieces;
  for (std::size_t i = 0; i <= candidates.size(); ++i) {
    const ExtendedRational lo = i == 0 ? domain.lo() : ExtendedRational(candidates[i - 1]);
    const ExtendedRational hi = i == candidates.size() ? domain.hi() : ExtendedRational(candidates[i]);
    MobiusMatrix m = matrix_at(sample_point(Interval(lo, hi))).canonical();
    if (!pieces.empty() && pieces.back() == m) continue;
    if (!pieces.empty()) breaks.push_back(candidates[i - 1]);
    pieces.push_back(std::move(m));
  }
  return {domain, std::move(breaks), std::move(pieces)};
}

PiecewiseMobius canonicalize(const PiecewiseMobius& f) {
  return build_piecewise(f.domain(), f.breakpoints(),
                         [&](const Rational& x) { return f.pieces()[f.piece_index(x)]; });
}

PiecewiseMobius compose_line(const PiecewiseMobius& g, const PiecewiseMobius& f) {
  const Interval img = f.image();
  if (!g.domain().contains(img)) {
    throw SourceTargetMismatch("image " + img.str() + " not inside domain " + g.domain().str());
  }
  std::vector<Rational> cand = f.breakpoints();
  for (const auto& b : g.breakpoints()) {
    if (img.contains(b)) cand.push_back(f.preimage(b));
  }
  return build_piecewise(f.domain(), std::move(cand), [&](const Rational& x) {
    return g.pieces()[g.piece_index(f(x))] * f.pieces()[f.piece_index(x)];
  });
}

PiecewiseMobius invert_on_image(const PiecewiseMobius& f) {
  std::vector<Rational> cand;
  for (const auto& b : f.breakpoints()) cand.push_back(f(b));
  return build_piecewise(f.image(), std::move(cand), [&](const Rational& y) {
    return f.pieces()[f.piece_index(f.preimage(y))].inverse();
  });
}

PiecewiseMobius restrict_to(const PiecewiseMobius& f, const Interval& sub) {
  if (!f.domain().contains(sub)) {
    throw std::domain_error("restriction to " + sub.str() + " outside domain " + f.domain().str());
  }
  return build_piecewise(sub, f.breakpoints(),
                         [&](const Rational& x) { return f.pieces()[f.piece_index(x)]; });
}

PiecewiseMobius translate(const PiecewiseMobius& f, const Rational& t) {
  std::vector<MobiusMatrix> pieces;
  for (const auto& m : f.pieces()) pieces.push_back((MobiusMatrix::translation(t) * m).canonical());
  return {f.domain(), f.breakpoints(), std::move(pieces)};
}

LineEmbedding chart_onto(const Interval& target) {
  const auto& lo = target.lo();
  const auto& hi = target.hi();
  const Interval line = Interval::whole_line();
  std::vector<Rational> zero{Rational(0)};
  if (!lo.is_finite() && !hi.is_finite()) return LineEmbedding::identity();
  if (lo.is_finite() && !hi.is_finite()) {
    const Rational& a = lo.value();
    return canonicalize({line, zero, {{-a, a + 1, -1, 1}, {1, a + 1, 0, 1}}});
  }
  if (!lo.is_finite()) {
    const Rational& b = hi.value();
    return canonicalize({line, zero, {{1, b - 1, 0, 1}, {b, b - 1, 1, 1}}});
  }
  const Rational m = target.midpoint();
  const Rational h = target.length() / 2;
  return canonicalize({line, zero, {{h - m, m, -1, 1}, {m + h, m, 1, 1}}});
}

bool is_surjective(const PiecewiseMobius& f) { return f.image() == f.domain() && f.is_line_embedding(); }

LineEmbedding pl_core_embedding(const std::vector<Rational>& knots, const std::vector<Rational>& values,
                                const Interval& target) {
  if (knots.size() < 2 || knots.size() != values.size()) {
    throw std::invalid_argument("need at least two knots with matching values");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i - 1] < knots[i]) || !(values[i - 1] < values[i])) {
      throw std::invalid_argument("knots and values must be strictly increasing");
    }
  }
  if (!target.contains(values.front()) || !target.contains(values.back())) {
    throw std::invalid_argument("core values must lie inside the target " + target.str());
  }
  const Rational& u = knots.front();
  const Rational& w = values.front();
  const Rational& v = knots.back();
  const Rational& z = values.back();
  std::vector<MobiusMatrix> pieces;
  if (target.lo().is_finite()) {
    const Rational& A = target.lo().value();
    pieces.push_back({-A, A * (1 + u) + (w - A), -1, 1 + u});
  } else {
    pieces.push_back(MobiusMatrix::translation(w - u));
  }
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const Rational s = (values[i + 1] - values[i]) / (knots[i + 1] - knots[i]);
    pieces.push_back(MobiusMatrix::affine(s, values[i] - s * knots[i]));
  }
  if (target.hi().is_finite()) {
    const Rational& B = target.hi().value();
    pieces.push_back({B, B * (1 - v) - (B - z), 1, 1 - v});
  } else {
    pieces.push_back(MobiusMatrix::translation(z - v));
  }
  return canonicalize({Interval::whole_line(), knots, std::move(pieces)});
}

// --------------------------------------------------------------- CircleMapLift

CircleMapLift::CircleMapLift(std::vector<Rational> breakpoints, std::vector<MobiusMatrix> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.size() != std::max<std::size_t>(1, breakpoints_.size())) {
    throw std::invalid_argument("circle lift needs one piece per cell of the period");
  }
}

namespace {

MobiusMatrix conjugate_by_shift(const MobiusMatrix& m, const Rational& n) {
  return MobiusMatrix::translation(n) * m * MobiusMatrix::translation(-n);
}

}  // namespace

MobiusMatrix CircleMapLift::matrix_at(const Rational& x) const {
  if (breakpoints_.empty()) return pieces_.front();
  const Rational q0 = base();
  const Rational n(floor_of(Rational(x - q0)));
  const Rational y = x - n;
  const auto idx = static_cast<std::size_t>(
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), y) - breakpoints_.begin() - 1);
  return conjugate_by_shift(pieces_[idx], n);
}

Rational CircleMapLift::operator()(const Rational& x) const { return matrix_at(x)(x); }

Rational CircleMapLift::preimage(const Rational& y) const {
  if (breakpoints_.empty()) return pieces_.front().inverse()(y);
  const Rational q0 = base();
  const Rational c0 = (*this)(q0);
  const Rational n(floor_of(Rational(y - c0)));
  const Rational yr = y - n;
  std::size_t idx = 0;
  while (idx + 1 < breakpoints_.size() && pieces_[idx + 1](breakpoints_[idx + 1]) <= yr) ++idx;
  return pieces_[idx].inverse()(yr) + n;
}

PiecewiseMobius CircleMapLift::restricted(const Interval& domain) const {
  if (!domain.is_bounded()) throw std::domain_error("lift restriction needs a bounded interval");
  std::vector<Rational> cand;
  const Integer lo = floor_of(domain.lo().value()) - 1;
  const Integer hi = ceil_of(domain.hi().value()) + 1;
  for (Integer n = lo; n <= hi; ++n) {
    for (const auto& q : breakpoints_) cand.push_back(q + Rational(n));
  }
  return build_piecewise(domain, std::move(cand), [&](const Rational& x) { return matrix_at(x); });
}

std::string CircleMapLift::str() const {
  if (breakpoints_.empty()) return "lift " + pieces_.front().str();
  std::string out = "lift";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    out += i ? " | " : " ";
    out += "[" + to_string(breakpoints_[i]) + ") " + pieces_[i].str();
  }
  return out;
}

std::optional<std::string> validate(const CircleMapLift& g) {
  const auto& bp = g.breakpoints();
  const auto& pc = g.pieces();
  if (bp.empty()) {
    const auto& m = pc.front();
    if (sgn(m.c) != 0 || m.a != m.d) return "a single-piece lift must be a translation";
    if (sgn(m.det()) <= 0) return "determinant <= 0";
    return std::nullopt;
  }
  for (std::size_t i = 0; i < bp.size(); ++i) {
    if (sgn(bp[i]) < 0 || bp[i] >= 1) return "period breakpoint outside [0, 1)";
    if (i && !(bp[i - 1] < bp[i])) return "period breakpoints not strictly increasing";
  }
  const std::size_t k = bp.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& m = pc[i];
    if (sgn(m.det()) <= 0) return "determinant <= 0 on piece " + std::to_string(i);
    const Rational lo = bp[i];
    const Rational hi = i + 1 < k ? bp[i + 1] : Rational(bp[0] + 1);
    if (auto p = m.pole(); p && lo <= *p && *p <= hi) {
      return "pole " + to_string(*p) + " in the closure of a cell";
    }
    const Rational next = i + 1 < k ? pc[i + 1](hi) : Rational(pc[0](bp[0]) + 1);
    if (m(hi) != next) return "discontinuity at " + to_string(hi);
  }
  return std::nullopt;
}

CircleMapLift build_lift(std::vector<Rational> candidates,
                         const std::function<MobiusMatrix(const Rational&)>& matrix_at) {
  for (auto& c : candidates) c -= Rational(floor_of(c));
  sort_unique(candidates);
  if (candidates.empty()) candidates.push_back(0);

  auto cell_matrices = [&](const std::vector<Rational>& q) {
    std::vector<MobiusMatrix> out;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Rational hi = i + 1 < q.size() ? q[i + 1] : Rational(q[0] + 1);
      out.push_back(matrix_at((q[i] + hi) / 2).canonical());
    }
    return out;
  };

  const auto fine = cell_matrices(candidates);
  const std::size_t k = candidates.size();
  std::vector<Rational> kept;
  for (std::size_t i = 0; i < k; ++i) {
    const MobiusMatrix& before =
        i == 0 ? conjugate_by_shift(fine[k - 1], -1).canonical() : fine[i - 1];
    if (!(before == fine[i])) kept.push_back(candidates[i]);
  }
  if (kept.empty()) return {{}, {fine[0]}};
  auto pieces = cell_matrices(kept);
  return {std::move(kept), std::move(pieces)};
}

CircleMapLift compose_circle(const CircleMapLift& g2, const CircleMapLift& g1) {
  std::vector<Rational> cand = g1.breakpoints();
  for (const auto& b : g2.breakpoints()) cand.push_back(g1.preimage(b));
  return build_lift(std::move(cand),
                    [&](const Rational& x) { return g2.matrix_at(g1(x)) * g1.matrix_at(x); });
}

CircleMapLift invert_lift(const CircleMapLift& g) {
  std::vector<Rational> cand;
  for (const auto& b : g.breakpoints()) cand.push_back(g(b));
  return build_lift(std::move(cand),
                    [&](const Rational& y) { return g.matrix_at(g.preimage(y)).inverse(); });
}

PiecewiseMobius compose_lift_line(const CircleMapLift& g, const PiecewiseMobius& f) {
  const Interval img = f.image();
  if (!img.is_bounded()) throw std::domain_error("lift composed after an unbounded map");
  std::vector<Rational> cand = f.breakpoints();
  const Integer lo = floor_of(img.lo().value()) - 1;
  const Integer hi = ceil_of(img.hi().value()) + 1;
  for (Integer n = lo; n <= hi; ++n) {
    for (const auto& q : g.breakpoints()) {
      const Rational y = q + Rational(n);
      if (img.contains(y)) cand.push_back(f.preimage(y));
    }
  }
  return build_piecewise(f.domain(), std::move(cand), [&](const Rational& x) {
    return g.matrix_at(f(x)) * f.pieces()[f.piece_index(x)];
  });
}

// --------------------------------------------------------- BoundedLineEmbedding

BoundedLineEmbedding::BoundedLineEmbedding(LineEmbedding base) : base_(std::move(base)) {
  if (!base_.is_line_embedding()) throw PreconditionViolation("bounded embedding must be defined on the line");
  const Interval img = base_.image();
  if (!img.is_bounded() || img.length() > 1) {
    throw PreconditionViolation("embedding image " + img.str() + " is not of length <= 1");
  }
}

std::pair<BoundedLineEmbedding, Integer> normalize_mod_z(const BoundedLineEmbedding& f) {
  const Integer n = -floor_of(f.image().lo().value());
  return {BoundedLineEmbedding(translate(f.base(), Rational(n))), n};
}

NormalizedPair normalize_pair_mod_z(const BoundedLineEmbedding& fplus, const BoundedLineEmbedding& fminus) {
  auto [plus, n] = normalize_mod_z(fplus);
  return {std::move(plus), BoundedLineEmbedding(translate(fminus.base(), Rational(-n))), n};
}

}  // namespace chiralkit::maps1d
