#pragma once

#include <compare>
#include <string>
#include <vector>

#include "chiralkit/rational.hpp"

namespace chiralkit::current {

/// Rational polynomial, coefficients in ascending degree, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& constant) : Polynomial(std::vector<Rational>{constant}) {}
  Polynomial(long constant) : Polynomial(Rational(constant)) {}

  /// s x + t
  static Polynomial linear(const Rational& s, const Rational& t) { return Polynomial({t, s}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational constant_term() const { return c_.empty() ? Rational(0) : c_[0]; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  Polynomial derivative() const;
  /// Antiderivative vanishing at 0.
  Polynomial antiderivative() const;
  Rational integrate(const Rational& a, const Rational& b) const;
  /// x -> p(s x + t)
  Polynomial compose_affine(const Rational& s, const Rational& t) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);

  std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

std::strong_ordering compare_rationals(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace chiralkit::current
