#include "chiralkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace chiralkit {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string trimmed(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Integer parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = trimmed(text);
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string_view num(s.data(), slash);
    const std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    Integer d = parse_integer(den);
    if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
  }
  if (is_integer_literal(s)) return Rational(parse_integer(s));

  // Plain decimal such as "0.25" or "-1.5"; converted exactly.
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (is_integer_literal(whole) && (frac.empty() || is_integer_literal(frac)) &&
        (frac.empty() || std::isdigit(static_cast<unsigned char>(frac[0])))) {
      Integer scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      Integer num = parse_integer(whole) * scale + (frac.empty() ? Integer(0) : parse_integer(frac));
      Rational q(negative ? Integer(-num) : num, scale);
      q.canonicalize();
      return q;
    }
  }
  throw std::invalid_argument("malformed rational literal '" + s + "'");
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs_of(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

double to_double(const Rational& q) { return q.get_d(); }

ExtendedRational ExtendedRational::parse(std::string_view text) {
  const std::string s = trimmed(text);
  if (s == "-inf") return neg_inf();
  if (s == "+inf" || s == "inf") return pos_inf();
  return ExtendedRational(parse_rational(s));
}

const Rational& ExtendedRational::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() of an infinite endpoint");
  return value_;
}

ExtendedRational ExtendedRational::shifted(const Rational& t) const {
  if (kind_ != Kind::Finite) return *this;
  return ExtendedRational(Rational(value_ + t));
}

std::string ExtendedRational::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: break;
  }
  return to_string(value_);
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  if (a.kind_ != ExtendedRational::Kind::Finite) return std::strong_ordering::equal;
  return compare(a.value_, b.value_);
}

std::string ComplexRational::str() const {
  if (sgn(im) == 0) return to_string(re);
  if (sgn(re) == 0) return to_string(im) + " i";
  if (sgn(im) < 0) return to_string(re) + " - " + to_string(Rational(-im)) + " i";
  return to_string(re) + " + " + to_string(im) + " i";
}

}  // namespace chiralkit
