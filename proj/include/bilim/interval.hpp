#pragma once

#include <stdexcept>
#include <string>

#include "bilim/rational.hpp"

namespace bilim {

// Closed rational interval [lo, hi], lo <= hi.
// Used both as an isolating interval for a real algebraic number and as a
// plain enclosure in interval arithmetic.
struct IntervalQ {
  Rational lo;
  Rational hi;

  IntervalQ() = default;
  IntervalQ(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::invalid_argument("IntervalQ: hi < lo");
  }
  static IntervalQ point(const Rational& q) { return IntervalQ(q, q); }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / Rational(2); }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool disjoint(const IntervalQ& o) const { return hi < o.lo || o.hi < lo; }
  bool inside(const IntervalQ& o) const { return o.lo <= lo && hi <= o.hi; }

  // Sign of every point in the interval, 0 if the interval straddles zero.
  int sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }

  std::string to_string() const {
    return "[" + lo.to_string() + ", " + hi.to_string() + "]";
  }
};

// Exact interval arithmetic; results are tightest rational enclosures.
inline IntervalQ operator+(const IntervalQ& a, const IntervalQ& b) {
  return IntervalQ(a.lo + b.lo, a.hi + b.hi);
}
inline IntervalQ operator-(const IntervalQ& a, const IntervalQ& b) {
  return IntervalQ(a.lo - b.hi, a.hi - b.lo);
}
inline IntervalQ operator-(const IntervalQ& a) {
  return IntervalQ(-a.hi, -a.lo);
}
inline IntervalQ operator*(const IntervalQ& a, const IntervalQ& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rational lo = min(min(p1, p2), min(p3, p4));
  Rational hi = max(max(p1, p2), max(p3, p4));
  return IntervalQ(std::move(lo), std::move(hi));
}
// Division requires an enclosure excluding zero.
inline IntervalQ operator/(const IntervalQ& a, const IntervalQ& b) {
  if (b.contains_zero())
    throw std::domain_error("IntervalQ: division by interval containing zero");
  return a * IntervalQ(b.hi.inv(), b.lo.inv());
}

}  // namespace bilim
