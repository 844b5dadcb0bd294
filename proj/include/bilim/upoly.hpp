#pragma once

#include <limits>
#include <string>
#include <vector>

#include "bilim/interval.hpp"
#include "bilim/rational.hpp"

namespace bilim {

// Degree of the zero polynomial. A dedicated sentinel, not -1, so that
// degree arithmetic cannot silently produce a plausible-looking value.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

// Dense univariate polynomial over Q. Invariant: coeffs_ has no trailing
// zeros, so coeffs_.empty() iff the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Rational c) { coeffs_.push_back(std::move(c)); trim(); }
  explicit UniPoly(std::vector<Rational> ascending_coeffs)
      : coeffs_(std::move(ascending_coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return UniPoly(Rational(1)); }
  // c * t^k
  static UniPoly monomial(Rational c, int k);
  static UniPoly variable() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kDegNegInf : static_cast<int>(coeffs_.size()) - 1; }
  const Rational& lc() const;                    // leading coefficient, poly must be nonzero
  const Rational& coeff(int k) const;            // 0 outside range
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const;
  IntervalQ eval(const IntervalQ& x) const;      // exact interval enclosure
  double eval_double(double x) const;

  UniPoly derivative() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, UniPoly p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  UniPoly pow(unsigned e) const;

  // Quotient and remainder over Q; q must be nonzero.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& quo, UniPoly& rem);
  // Exact division; throws std::domain_error when the remainder is nonzero.
  static UniPoly div_exact(const UniPoly& a, const UniPoly& b);

  UniPoly monic() const;                         // zero stays zero
  // p(t) -> p(t + c)
  UniPoly taylor_shift(const Rational& c) const;
  // p(t) -> p(c t)
  UniPoly scale_arg(const Rational& c) const;
  // p(t) -> t^deg * p(1/t)
  UniPoly reverse() const;

  // Multiply by the lcm of coefficient denominators and divide by the gcd of
  // numerators; result has integer coefficients, positive content 1, same
  // roots. Zero stays zero. Sign of leading coefficient preserved.
  UniPoly primitive_integer() const;

  // All real roots lie in (-bound, bound).
  Rational root_bound() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0,0) = 0. Subresultant pseudo-remainders with content
// stripping internally to control coefficient growth.
UniPoly upoly_gcd(const UniPoly& p, const UniPoly& q);

// p / gcd(p, p'), monic. Rejects the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);

// Standard resultant; zero iff p and q share a complex root.
Rational resultant(const UniPoly& p, const UniPoly& q);

// Sturm chain of a (not necessarily square-free) polynomial. Variation
// differences count distinct real roots.
class SturmChain {
 public:
  static SturmChain build(const UniPoly& p);

  const UniPoly& poly() const { return seq_.front(); }
  // Number of sign variations at x / at the infinities, zeros skipped.
  int variations_at(const Rational& x) const;
  int variations_neg_inf() const;
  int variations_pos_inf() const;
  // Distinct real roots in the half-open interval (a, b], a <= b.
  int count_halfopen(const Rational& a, const Rational& b) const;
  int count_whole_line() const;

 private:
  std::vector<UniPoly> seq_;  // integer-normalized, no trailing zero entries
};

// Exact count of distinct real roots of p in the open interval. Endpoints
// that happen to be roots are nudged inward by (1/(1+max|coeff|)) * 2^-k for
// increasing k until they are not roots.
int count_real_roots(const UniPoly& p, const IntervalQ& interval);
int count_real_roots(const UniPoly& p);  // whole line

// Pairwise-disjoint isolating intervals, one per distinct real root, sorted
// ascending. A rational root may be returned as a degenerate point interval.
// Non-point intervals have non-root endpoints. Rejects the zero polynomial.
std::vector<IntervalQ> isolate_real_roots(const UniPoly& p);

// One bisection step of an isolating interval of a root of chain.poly().
// Point intervals are returned unchanged. The result still isolates the same
// root and has width at most half of the input (or is a point).
IntervalQ refine_root_interval(const SturmChain& chain, const IntervalQ& iv);

}  // namespace bilim
