#include "chiralkit/current/polynomial.hpp"

namespace chiralkit::current {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

double Polynomial::eval(double x) const {
  double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  std::vector<Rational> a{Rational(0)};
  for (std::size_t k = 0; k < c_.size(); ++k) a.push_back(c_[k] / static_cast<long>(k + 1));
  return Polynomial(std::move(a));
}

Rational Polynomial::integrate(const Rational& a, const Rational& b) const {
  const Polynomial F = antiderivative();
  return F(b) - F(a);
}

Polynomial Polynomial::compose_affine(const Rational& s, const Rational& t) const {
  const Polynomial inner = linear(s, t);
  Polynomial r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + Polynomial(*it);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> r;
  for (const auto& c : p.c_) r.push_back(s * c);
  return Polynomial(std::move(r));
}

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(c_[k]);
    if (k == 1) out += " x";
    if (k > 1) out += " x^" + std::to_string(k);
  }
  return out;
}

std::strong_ordering compare_rationals(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  return compare_rationals(a.c_, b.c_);
}

}  // namespace chiralkit::current
