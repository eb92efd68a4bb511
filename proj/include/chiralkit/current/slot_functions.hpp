#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chiralkit/current/polynomial.hpp"
#include "chiralkit/maps1d.hpp"

// Piecewise polynomial test functions: compactly supported on the line, or
// periodic with period 1. Steps are allowed; jumps enter integrals by the
// midpoint convention.
namespace chiralkit::current {

struct Jump {
  Rational at;
  Rational size;  ///< right limit minus left limit
};

/// Compactly supported piecewise polynomial: pieces[i] on [knots[i], knots[i+1]),
/// zero outside [knots.front(), knots.back()].
class LineFn {
 public:
  LineFn() = default;
  LineFn(std::vector<Rational> knots, std::vector<Polynomial> pieces);

  /// Hat function rising from 0 at a to `height` at peak and back to 0 at b.
  static LineFn triangle(const Rational& a, const Rational& peak, const Rational& b,
                         const Rational& height = 1);
  static LineFn indicator(const Rational& a, const Rational& b, const Rational& value = 1);
  /// Continuous bump (x - a)^2 (b - x)^2 scaled to peak `height`.
  static LineFn quartic_bump(const Rational& a, const Rational& b, const Rational& height = 1);

  const std::vector<Rational>& knots() const { return knots_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  bool is_zero() const { return pieces_.empty(); }
  std::optional<std::pair<Rational, Rational>> support() const;

  Rational operator()(const Rational& x) const;  ///< right-continuous value
  Rational left_limit(const Rational& x) const;
  Rational right_limit(const Rational& x) const { return (*this)(x); }
  /// Polynomial in force just right of x (zero outside the support).
  Polynomial piece_at(const Rational& x) const;
  double eval(double x) const;

  Rational integral() const;
  std::vector<Jump> jumps() const;
  /// Classical derivative on each piece; jumps are dropped.
  LineFn piecewise_derivative() const;
  bool is_continuous() const { return jumps().empty(); }

  friend LineFn operator+(const LineFn& a, const LineFn& b);
  friend LineFn operator*(const Rational& s, const LineFn& f);
  friend LineFn operator*(const LineFn& a, const LineFn& b);

  std::string str() const;
  friend bool operator==(const LineFn&, const LineFn&) = default;
  friend std::strong_ordering operator<=>(const LineFn& a, const LineFn& b);

 private:
  std::vector<Rational> knots_;
  std::vector<Polynomial> pieces_;
};

/// Period-1 piecewise polynomial described on [0, 1); knots always start at 0
/// and end at 1.
class CircleFn {
 public:
  CircleFn() : CircleFn(Rational(0)) {}
  CircleFn(std::vector<Rational> knots, std::vector<Polynomial> pieces);
  explicit CircleFn(const Rational& constant) : CircleFn({Rational(0), Rational(1)}, {Polynomial(constant)}) {}

  static CircleFn triangle(const Rational& a, const Rational& peak, const Rational& b,
                           const Rational& height = 1);
  /// Periodization of a compactly supported function.
  static CircleFn fold(const LineFn& f);

  const std::vector<Rational>& knots() const { return knots_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  bool is_constant() const { return pieces_.size() == 1 && pieces_[0].is_constant(); }
  bool is_zero() const { return pieces_.size() == 1 && pieces_[0].is_zero(); }

  Rational operator()(const Rational& x) const;
  Rational left_limit(const Rational& x) const;
  Polynomial piece_at(const Rational& x) const;  ///< piece right of x, in period coordinates
  double eval(double x) const;

  Rational integral() const;
  std::vector<Jump> jumps() const;  ///< in [0, 1)

  friend CircleFn operator+(const CircleFn& a, const CircleFn& b);
  friend CircleFn operator*(const Rational& s, const CircleFn& f);

  std::string str() const;
  friend bool operator==(const CircleFn&, const CircleFn&) = default;
  friend std::strong_ordering operator<=>(const CircleFn& a, const CircleFn& b);

 private:
  std::vector<Rational> knots_;
  std::vector<Polynomial> pieces_;
};

using SlotFn = std::variant<LineFn, CircleFn>;

/// -1/2 * integral of phi dpsi over the line.
Rational tau_line(const LineFn& phi, const LineFn& psi);
/// -1/2 * integral of phi dpsi over one period.
Rational tau_circle(const CircleFn& phi, const CircleFn& psi);

/// phi o f^{-1} on the image of f, zero elsewhere. f must contain the support in
/// its domain and be affine wherever phi is not locally constant
/// (NonPolynomialPushforward otherwise).
LineFn pushforward(const maps1d::PiecewiseMobius& f, const LineFn& phi);
CircleFn pushforward(const maps1d::CircleMapLift& g, const CircleFn& phi);

std::string str(const SlotFn& f);

}  // namespace chiralkit::current
