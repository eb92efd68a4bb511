#pragma once

#include "chiralkit/geometry.hpp"
#include "chiralkit/rational.hpp"
#include "doctest.h"

namespace test {

inline chiralkit::Rational q(const char* s) { return chiralkit::parse_rational(s); }

inline chiralkit::geometry::Interval iv(const char* lo, const char* hi) {
  return chiralkit::geometry::Interval::parse(lo, hi);
}

inline chiralkit::geometry::DoubleCone cone(const char* a, const char* b, const char* c, const char* d) {
  return {iv(a, b), iv(c, d)};
}

/// n evenly spaced interior rationals of a bounded interval.
inline std::vector<chiralkit::Rational> interior(const chiralkit::geometry::Interval& i, long n) {
  std::vector<chiralkit::Rational> out;
  const chiralkit::Rational lo = i.lo().value();
  const chiralkit::Rational w = i.hi().value() - lo;
  for (long k = 1; k <= n; ++k) out.emplace_back(lo + w * chiralkit::Rational(k, n + 1));
  return out;
}

}  // namespace test
