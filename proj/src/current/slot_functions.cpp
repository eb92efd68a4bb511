#include "chiralkit/current/slot_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chiralkit/errors.hpp"

namespace chiralkit::current {

namespace {

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_knots(const std::vector<Rational>& knots, std::size_t pieces) {
  if (knots.empty() && pieces == 0) return;
  if (knots.size() != pieces + 1) throw std::invalid_argument("need one piece between each pair of knots");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i - 1] < knots[i])) throw std::invalid_argument("knots must be strictly increasing");
  }
}

// Merges equal neighbours. Without keep_ends, zero pieces at both ends are dropped.
void merge_pieces(std::vector<Rational>& knots, std::vector<Polynomial>& pieces, bool keep_ends) {
  if (pieces.empty()) return;
  std::vector<Rational> k{knots.front()};
  std::vector<Polynomial> p{pieces.front()};
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i] == p.back()) continue;
    k.push_back(knots[i]);
    p.push_back(pieces[i]);
  }
  k.push_back(knots.back());
  if (!keep_ends) {
    std::size_t lo = 0;
    std::size_t hi = p.size();
    while (lo < hi && p[lo].is_zero()) ++lo;
    while (hi > lo && p[hi - 1].is_zero()) --hi;
    if (lo == hi) {
      knots.clear();
      pieces.clear();
      return;
    }
    k = std::vector<Rational>(k.begin() + static_cast<long>(lo), k.begin() + static_cast<long>(hi) + 1);
    p = std::vector<Polynomial>(p.begin() + static_cast<long>(lo), p.begin() + static_cast<long>(hi));
  }
  knots = std::move(k);
  pieces = std::move(p);
}

template <class F>
std::vector<Rational> union_knots(const F& a, const F& b) {
  std::vector<Rational> k = a.knots();
  k.insert(k.end(), b.knots().begin(), b.knots().end());
  sort_unique(k);
  return k;
}

}  // namespace

// ---------------------------------------------------------------------- LineFn

LineFn::LineFn(std::vector<Rational> knots, std::vector<Polynomial> pieces)
    : knots_(std::move(knots)), pieces_(std::move(pieces)) {
  check_knots(knots_, pieces_.size());
  merge_pieces(knots_, pieces_, false);
}

LineFn LineFn::triangle(const Rational& a, const Rational& peak, const Rational& b, const Rational& height) {
  if (!(a < peak && peak < b)) throw std::invalid_argument("triangle needs a < peak < b");
  const Rational up = height / (peak - a);
  const Rational down = height / (b - peak);
  return {{a, peak, b}, {Polynomial::linear(up, -up * a), Polynomial::linear(-down, down * b)}};
}

LineFn LineFn::indicator(const Rational& a, const Rational& b, const Rational& value) {
  return {{a, b}, {Polynomial(value)}};
}

LineFn LineFn::quartic_bump(const Rational& a, const Rational& b, const Rational& height) {
  const Polynomial left = Polynomial::linear(1, -a);
  const Polynomial right = Polynomial::linear(-1, b);
  const Polynomial q = left * left * right * right;
  const Rational half = (b - a) / 2;
  return {{a, b}, {Rational(height / (half * half * half * half)) * q}};
}

std::optional<std::pair<Rational, Rational>> LineFn::support() const {
  if (pieces_.empty()) return std::nullopt;
  return std::make_pair(knots_.front(), knots_.back());
}

Polynomial LineFn::piece_at(const Rational& x) const {
  if (pieces_.empty() || x < knots_.front() || x >= knots_.back()) return {};
  const auto idx = std::upper_bound(knots_.begin(), knots_.end(), x) - knots_.begin() - 1;
  return pieces_[static_cast<std::size_t>(idx)];
}

Rational LineFn::operator()(const Rational& x) const { return piece_at(x)(x); }

Rational LineFn::left_limit(const Rational& x) const {
  if (pieces_.empty() || x <= knots_.front() || x > knots_.back()) return 0;
  const auto idx = std::lower_bound(knots_.begin(), knots_.end(), x) - knots_.begin() - 1;
  return pieces_[static_cast<std::size_t>(idx)](x);
}

double LineFn::eval(double x) const {
  if (pieces_.empty() || x < knots_.front().get_d() || x >= knots_.back().get_d()) return 0;
  std::size_t idx = 0;
  while (idx + 1 < pieces_.size() && knots_[idx + 1].get_d() <= x) ++idx;
  return pieces_[idx].eval(x);
}

Rational LineFn::integral() const {
  Rational s = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) s += pieces_[i].integrate(knots_[i], knots_[i + 1]);
  return s;
}

std::vector<Jump> LineFn::jumps() const {
  std::vector<Jump> out;
  for (const auto& k : knots_) {
    Rational d = (*this)(k) - left_limit(k);
    if (sgn(d) != 0) out.push_back({k, d});
  }
  return out;
}

LineFn LineFn::piecewise_derivative() const {
  std::vector<Polynomial> d;
  for (const auto& p : pieces_) d.push_back(p.derivative());
  return {knots_, std::move(d)};
}

LineFn operator+(const LineFn& a, const LineFn& b) {
  const auto k = union_knots(a, b);
  if (k.empty()) return {};
  std::vector<Polynomial> p;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const Rational mid = (k[i] + k[i + 1]) / 2;
    p.push_back(a.piece_at(mid) + b.piece_at(mid));
  }
  return {k, std::move(p)};
}

LineFn operator*(const Rational& s, const LineFn& f) {
  std::vector<Polynomial> p;
  for (const auto& q : f.pieces_) p.push_back(s * q);
  if (sgn(s) == 0) return {};
  return {f.knots_, std::move(p)};
}

LineFn operator*(const LineFn& a, const LineFn& b) {
  const auto k = union_knots(a, b);
  if (k.empty()) return {};
  std::vector<Polynomial> p;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const Rational mid = (k[i] + k[i + 1]) / 2;
    p.push_back(a.piece_at(mid) * b.piece_at(mid));
  }
  return {k, std::move(p)};
}

std::string LineFn::str() const {
  if (pieces_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += " | ";
    out += "[" + to_string(knots_[i]) + ", " + to_string(knots_[i + 1]) + ") " + pieces_[i].str();
  }
  return out;
}

namespace {

template <class F>
std::strong_ordering compare_fns(const F& a, const F& b) {
  if (auto c = compare_rationals(a.knots(), b.knots()); c != 0) return c;
  if (a.pieces().size() != b.pieces().size()) return a.pieces().size() <=> b.pieces().size();
  for (std::size_t i = 0; i < a.pieces().size(); ++i) {
    if (auto c = a.pieces()[i] <=> b.pieces()[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const LineFn& a, const LineFn& b) { return compare_fns(a, b); }

// -------------------------------------------------------------------- CircleFn

CircleFn::CircleFn(std::vector<Rational> knots, std::vector<Polynomial> pieces)
    : knots_(std::move(knots)), pieces_(std::move(pieces)) {
  check_knots(knots_, pieces_.size());
  if (knots_.empty() || knots_.front() != 0 || knots_.back() != 1) {
    throw std::invalid_argument("circle function knots must run from 0 to 1");
  }
  merge_pieces(knots_, pieces_, true);
}

CircleFn CircleFn::triangle(const Rational& a, const Rational& peak, const Rational& b, const Rational& height) {
  return fold(LineFn::triangle(a, peak, b, height));
}

CircleFn CircleFn::fold(const LineFn& f) {
  const auto supp = f.support();
  if (!supp) return CircleFn(Rational(0));
  std::vector<Rational> k{Rational(0), Rational(1)};
  for (const auto& x : f.knots()) k.push_back(x - Rational(floor_of(x)));
  sort_unique(k);
  const Integer nlo = floor_of(supp->first) - 1;
  const Integer nhi = ceil_of(supp->second) + 1;
  std::vector<Polynomial> p;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const Rational mid = (k[i] + k[i + 1]) / 2;
    Polynomial sum;
    for (Integer n = nlo; n <= nhi; ++n) {
      const Rational shift(n);
      sum += f.piece_at(mid + shift).compose_affine(1, shift);
    }
    p.push_back(std::move(sum));
  }
  return {k, std::move(p)};
}

Polynomial CircleFn::piece_at(const Rational& x) const {
  const Rational y = x - Rational(floor_of(x));
  const auto idx = std::upper_bound(knots_.begin(), knots_.end(), y) - knots_.begin() - 1;
  return pieces_[static_cast<std::size_t>(idx)];
}

Rational CircleFn::operator()(const Rational& x) const {
  const Rational y = x - Rational(floor_of(x));
  return piece_at(y)(y);
}

Rational CircleFn::left_limit(const Rational& x) const {
  const Rational y = x - Rational(floor_of(x));
  if (sgn(y) == 0) return pieces_.back()(Rational(1));
  const auto idx = std::lower_bound(knots_.begin(), knots_.end(), y) - knots_.begin() - 1;
  return pieces_[static_cast<std::size_t>(idx)](y);
}

double CircleFn::eval(double x) const {
  const double y = x - std::floor(x);
  std::size_t idx = 0;
  while (idx + 1 < pieces_.size() && knots_[idx + 1].get_d() <= y) ++idx;
  return pieces_[idx].eval(y);
}

Rational CircleFn::integral() const {
  Rational s = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) s += pieces_[i].integrate(knots_[i], knots_[i + 1]);
  return s;
}

std::vector<Jump> CircleFn::jumps() const {
  std::vector<Jump> out;
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    Rational d = (*this)(knots_[i]) - left_limit(knots_[i]);
    if (sgn(d) != 0) out.push_back({knots_[i], d});
  }
  return out;
}

CircleFn operator+(const CircleFn& a, const CircleFn& b) {
  const auto k = union_knots(a, b);
  std::vector<Polynomial> p;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const Rational mid = (k[i] + k[i + 1]) / 2;
    p.push_back(a.piece_at(mid) + b.piece_at(mid));
  }
  return {k, std::move(p)};
}

CircleFn operator*(const Rational& s, const CircleFn& f) {
  std::vector<Polynomial> p;
  for (const auto& q : f.pieces_) p.push_back(s * q);
  return {f.knots_, std::move(p)};
}

std::string CircleFn::str() const {
  std::string out = "periodic ";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += " | ";
    out += "[" + to_string(knots_[i]) + ", " + to_string(knots_[i + 1]) + ") " + pieces_[i].str();
  }
  return out;
}

std::strong_ordering operator<=>(const CircleFn& a, const CircleFn& b) { return compare_fns(a, b); }

// ------------------------------------------------------------------------- tau

namespace {

template <class F>
Rational tau_generic(const F& phi, const F& psi) {
  const auto k = union_knots(phi, psi);
  Rational s = 0;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const Rational mid = (k[i] + k[i + 1]) / 2;
    s += (phi.piece_at(mid) * psi.piece_at(mid).derivative()).integrate(k[i], k[i + 1]);
  }
  for (const auto& j : psi.jumps()) s += (phi(j.at) + phi.left_limit(j.at)) / 2 * j.size;
  return -s / 2;
}

}  // namespace

Rational tau_line(const LineFn& phi, const LineFn& psi) { return tau_generic(phi, psi); }
Rational tau_circle(const CircleFn& phi, const CircleFn& psi) { return tau_generic(phi, psi); }

// ----------------------------------------------------------------- pushforward

namespace {

Polynomial pulled_back(const Polynomial& p, const maps1d::MobiusMatrix& m, const Rational& shift) {
  if (p.is_constant()) return p;
  if (!m.is_affine()) {
    throw NonPolynomialPushforward("a Mobius piece " + m.str() + " meets a non-constant part of the function");
  }
  // y = (a x + b) / d  =>  x = (d y - b) / a
  return p.compose_affine(m.d / m.a, Rational(-m.b / m.a - shift));
}

}  // namespace

LineFn pushforward(const maps1d::PiecewiseMobius& f, const LineFn& phi) {
  const auto supp = phi.support();
  if (!supp) return {};
  if (!f.domain().contains(supp->first) || !f.domain().contains(supp->second)) {
    throw PreconditionViolation("support of the function is not inside the map's domain " + f.domain().str());
  }
  std::vector<Rational> k;
  for (const auto& x : phi.knots()) k.push_back(f(x));
  for (const auto& b : f.breakpoints()) {
    if (b > supp->first && b < supp->second) k.push_back(f(b));
  }
  sort_unique(k);
  std::vector<Polynomial> p;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const Rational x = f.preimage((k[i] + k[i + 1]) / 2);
    p.push_back(pulled_back(phi.piece_at(x), f.pieces()[f.piece_index(x)], 0));
  }
  return {k, std::move(p)};
}

CircleFn pushforward(const maps1d::CircleMapLift& g, const CircleFn& phi) {
  if (phi.is_constant()) return phi;
  std::vector<Rational> k{Rational(0), Rational(1)};
  auto reduce = [](const Rational& y) { return Rational(y - Rational(floor_of(y))); };
  for (std::size_t i = 0; i + 1 < phi.knots().size(); ++i) k.push_back(reduce(g(phi.knots()[i])));
  for (const auto& q : g.breakpoints()) k.push_back(reduce(g(q)));
  sort_unique(k);
  std::vector<Polynomial> p;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const Rational x = g.preimage((k[i] + k[i + 1]) / 2);
    const Rational m(floor_of(x));
    p.push_back(pulled_back(phi.piece_at(x), g.matrix_at(x), m));
  }
  return {k, std::move(p)};
}

std::string str(const SlotFn& f) {
  return std::visit([](const auto& g) { return g.str(); }, f);
}

}  // namespace chiralkit::current
