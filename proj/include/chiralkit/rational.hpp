#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace chiralkit {

/// Exact rational scalar. All geometry and morphism data is built on this.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
inline Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Rational abs_of(const Rational& q);
double to_double(const Rational& q);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// A rational number or one of the two infinite symbols.
class ExtendedRational {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtendedRational() = default;
  ExtendedRational(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}
  ExtendedRational(long value) : kind_(Kind::Finite), value_(value) {}

  static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
  static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }

  /// Accepts "p/q", "p", "-inf", "+inf" (and "inf").
  static ExtendedRational parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  /// Translation; infinities are fixed.
  ExtendedRational shifted(const Rational& t) const;

  std::string str() const;

  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  explicit ExtendedRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

/// Exact complex number with rational parts; the scalar field of the Weyl algebras.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}
  ComplexRational(long r) : re(r) {}
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  ComplexRational conj() const { return {re, -im}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// "p/q", "p/q i" or "p/q + r/s i".
  std::string str() const;
};

}  // namespace chiralkit
