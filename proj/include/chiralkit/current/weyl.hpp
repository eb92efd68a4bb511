#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chiralkit/rational.hpp"

// Formal CCR algebra over a set of letters: complex combinations of symmetric
// (Weyl ordered) words, multiplied by the Moyal-Weyl contraction formula with
// hbar = 1.
namespace chiralkit::current {

template <class Letter>
class WeylElement {
 public:
  using Word = std::vector<Letter>;  ///< sorted
  using Terms = std::map<Word, ComplexRational>;

  WeylElement() = default;

  static WeylElement unit() { return word({}, ComplexRational(1)); }
  static WeylElement generator(Letter l) { return word({std::move(l)}, ComplexRational(1)); }
  static WeylElement word(Word w, ComplexRational c = ComplexRational(1)) {
    std::sort(w.begin(), w.end());
    WeylElement e;
    e.add(std::move(w), c);
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Word w, const ComplexRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(w), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WeylElement& operator+=(const WeylElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a += ComplexRational(-1) * b; }
  friend WeylElement operator*(const ComplexRational& s, const WeylElement& a) {
    WeylElement out;
    for (const auto& [w, c] : a.terms_) out.add(w, s * c);
    return out;
  }

  /// Complex conjugation of coefficients; symmetric words of real letters are self-adjoint.
  WeylElement involution() const {
    WeylElement out;
    for (const auto& [w, c] : terms_) out.add(w, c.conj());
    return out;
  }

  /// Letter-wise action of an algebra map induced by a map of letters.
  WeylElement map_letters(const std::function<Letter(const Letter&)>& f) const {
    WeylElement out;
    for (const auto& [w, c] : terms_) {
      Word image;
      image.reserve(w.size());
      for (const auto& l : w) image.push_back(f(l));
      std::sort(image.begin(), image.end());
      out.add(std::move(image), c);
    }
    return out;
  }

  std::string str(const std::function<std::string(const Letter&)>& show) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      if (w.empty()) out += " 1";
      for (const auto& l : w) out += " " + show(l);
    }
    return out;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  Terms terms_;
};

namespace detail {

template <class Letter, class Tau>
void contract(const std::vector<Letter>& u, const std::vector<Letter>& v, std::size_t i, std::vector<bool>& used,
              std::vector<Letter>& rest, ComplexRational weight, const ComplexRational& coeff, const Tau& tau,
              WeylElement<Letter>& out) {
  if (i == u.size()) {
    std::vector<Letter> word = rest;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!used[j]) word.push_back(v[j]);
    }
    std::sort(word.begin(), word.end());
    out.add(std::move(word), coeff * weight);
    return;
  }
  rest.push_back(u[i]);
  contract(u, v, i + 1, used, rest, weight, coeff, tau, out);
  rest.pop_back();
  const ComplexRational half_i(Rational(0), Rational(1, 2));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (used[j]) continue;
    const Rational t = tau(u[i], v[j]);
    if (sgn(t) == 0) continue;
    used[j] = true;
    contract(u, v, i + 1, used, rest, weight * half_i * ComplexRational(t), coeff, tau, out);
    used[j] = false;
  }
}

}  // namespace detail

/// u * v = sum over partial pairings of letters of u with letters of v of
/// (i/2)^k prod tau(pair) times the word of unpaired letters.
template <class Letter, class Tau>
WeylElement<Letter> star(const WeylElement<Letter>& a, const WeylElement<Letter>& b, const Tau& tau) {
  WeylElement<Letter> out;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      std::vector<bool> used(v.size(), false);
      std::vector<Letter> rest;
      detail::contract(u, v, 0, used, rest, ComplexRational(1), cu * cv, tau, out);
    }
  }
  return out;
}

template <class Letter, class Tau>
WeylElement<Letter> commutator(const WeylElement<Letter>& a, const WeylElement<Letter>& b, const Tau& tau) {
  return star(a, b, tau) - star(b, a, tau);
}

}  // namespace chiralkit::current
