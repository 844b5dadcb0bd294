#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bilim/interval.hpp"
#include "bilim/rational.hpp"
#include "bilim/upoly.hpp"

namespace bilim {

// Recursive dense multivariate polynomial over Q in variables v1, v2, ...
// A level-0 value is a rational constant; a level-k value is dense in v_k
// with coefficients of strictly lower level. Normal form: the coefficient
// list has at least two entries, the trailing entry is nonzero, and a
// single-entry list collapses to that entry.
class MPoly {
 public:
  MPoly() : lvl_(0), cval_(0) {}
  explicit MPoly(Rational c) : lvl_(0), cval_(std::move(c)) {}
  static MPoly variable(int level);

  int level() const { return lvl_; }
  bool is_zero() const { return lvl_ == 0 && cval_.is_zero(); }
  bool is_constant() const { return lvl_ == 0; }
  const Rational& constant_value() const;

  // Degree in v_level; 0 for constants.
  int degree_top() const;
  // Dense coefficient view in v_lvl for any lvl >= level().
  std::vector<MPoly> coeffs_at(int lvl) const;
  static MPoly from_coeffs(int lvl, std::vector<MPoly> coeffs);

  bool operator==(const MPoly& o) const;
  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& c, const MPoly& a);
  MPoly pow(unsigned e) const;

  // Substitute v_level() := val; no-op on constants.
  MPoly subst_top(const MPoly& val) const;
  // Replace every variable v_j with j > threshold by v_{j+by}.
  MPoly remap_vars_above(int threshold, int by) const;
  // Interval enclosure over a box assigning box[j-1] to v_j.
  IntervalQ eval_box(const std::vector<IntervalQ>& box) const;

  // a = q*d + r with deg_{v_lvl} r < deg_{v_lvl} d; d monic in v_lvl.
  static void divmod_monic(const MPoly& a, const MPoly& d, int lvl, MPoly& q,
                           MPoly& r);

  // True when a == q*b for a single rational q (b nonzero); stores that q.
  // Compares normal forms only; no value reasoning.
  static bool proportional(const MPoly& a, const MPoly& b, Rational& q);

 private:
  static bool ratio_rec(const MPoly& a, const MPoly& b,
                        std::optional<Rational>& q);

  int lvl_;
  Rational cval_;          // level-0 payload
  std::vector<MPoly> cs_;  // level>0 payload, dense in v_lvl
};

// One extension step: v_k is the real root of `defining` (monic in v_k,
// lower-level coefficients reduced, square-free once the lower variables
// take their root values) singled out by `isolating`. The interval either
// is a point (the root is that rational) or has endpoints that are not
// roots and contains exactly one root of the specialized polynomial.
struct TowerLevel {
  MPoly defining;
  IntervalQ isolating;
};

using Tower = std::shared_ptr<const std::vector<TowerLevel>>;

// Real algebraic number held as a fraction num/den of reduced polynomials
// over a triangular tower of extensions; a null tower means the value is
// the plain rational num/den (with den fixed to 1). Immutable.
class AlgNum {
 public:
  AlgNum() : num_(Rational(0)), den_(Rational(1)) {}
  AlgNum(Rational q) : num_(std::move(q)), den_(Rational(1)) {}
  AlgNum(int v) : AlgNum(Rational(v)) {}
  // den must be nonzero as a value; both polynomials are reduced and the
  // tower is trimmed to the levels the value actually uses.
  AlgNum(Tower t, MPoly num, MPoly den);

  bool is_rational() const { return tower_ == nullptr; }
  const Rational& rational_value() const;
  const Tower& tower() const { return tower_; }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  AlgNum operator-() const;
  friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  // Throws std::domain_error when the divisor is zero.
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b);
  AlgNum inv() const;
  AlgNum pow(unsigned e) const;
  AlgNum abs() const;

 private:
  Tower tower_;  // null for rationals
  MPoly num_, den_;
};

// Exact zero test; never decided from interval width alone.
bool alg_is_zero(const AlgNum& a);
// Sign in {-1, 0, +1}: interval refinement first, a symbolic zero test
// after 64 inconclusive rounds, then refinement to a verdict.
int alg_sign(const AlgNum& a);
// Sign of a - b.
int alg_compare(const AlgNum& a, const AlgNum& b);
// Enclosure no wider than max_width.
IntervalQ alg_enclosure(const AlgNum& a, const Rational& max_width);
// Fixed-point decimal with the given number of fraction digits, rounded to
// nearest with ties to even; trailing zeros are kept.
std::string to_decimal(const AlgNum& a, int digits);
// Exact rational value when the number is rational, nullopt otherwise.
std::optional<Rational> alg_to_rational(const AlgNum& a);

// Root description over Q: minimal polynomial (integer-primitive, positive
// leading coefficient) plus an interval containing exactly this root.
struct RealAlgebraic {
  UniPoly defining;
  IntervalQ isolating;
};
RealAlgebraic to_real_algebraic(const AlgNum& a);

// Dense univariate polynomial with algebraic coefficients (ascending).
// Structural degree ignores coefficients whose value happens to be zero;
// value-aware routines handle those explicitly.
class APoly {
 public:
  APoly() = default;
  explicit APoly(std::vector<AlgNum> ascending);
  static APoly from_upoly(const UniPoly& p);

  bool is_zero() const { return c_.empty(); }  // structural
  int degree() const;                          // kDegNegInf when empty
  const AlgNum& coeff(int i) const;
  const std::vector<AlgNum>& coeffs() const { return c_; }

  AlgNum eval(const AlgNum& x) const;
  APoly derivative() const;
  friend APoly operator+(const APoly& a, const APoly& b);
  friend APoly operator-(const APoly& a, const APoly& b);
  friend APoly operator*(const APoly& a, const APoly& b);
  friend APoly operator*(const AlgNum& c, const APoly& a);

 private:
  std::vector<AlgNum> c_;  // structurally trimmed
};

// All real roots (each exactly once, ascending), as algebraic numbers over
// towers extending the coefficients' towers. Rational roots come back as
// plain rationals. Rejects polynomials that are zero as a value.
std::vector<AlgNum> apoly_real_roots(const APoly& p);

}  // namespace bilim
