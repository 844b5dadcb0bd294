#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bilim/rational.hpp"
#include "bilim/upoly.hpp"

namespace bilim {

// Order of the zero polynomial. A dedicated sentinel, like kDegNegInf.
inline constexpr int kOrdInf = std::numeric_limits<int>::max();

// Sparse exact bivariate polynomial over Q, terms keyed by (i, j) for x^i y^j.
// Invariant: no stored zero coefficients.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;

  static BiPoly zero() { return BiPoly(); }
  static BiPoly constant(Rational c);
  static BiPoly monomial2(Rational c, int i, int j);
  static BiPoly x() { return monomial2(Rational(1), 1, 0); }
  static BiPoly y() { return monomial2(Rational(1), 0, 1); }
  static BiPoly from_upoly_x(const UniPoly& p);  // p(x)
  static BiPoly from_upoly_y(const UniPoly& p);  // p(y)
  // c[j] is the coefficient of y^j as a polynomial in x.
  static BiPoly from_y_coeffs(const std::vector<UniPoly>& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  void set_coeff(int i, int j, Rational c);

  int total_degree() const;  // kDegNegInf for zero
  int deg_x() const;
  int deg_y() const;
  int ord() const;  // smallest i+j over stored terms; kOrdInf for zero

  UniPoly coeff_y(int j) const;  // coefficient of y^j, polynomial in x
  std::vector<UniPoly> y_coeffs() const;

  Rational eval(const Rational& xv, const Rational& yv) const;
  UniPoly eval_x(const Rational& xv) const;  // univariate in y
  UniPoly eval_y(const Rational& yv) const;  // univariate in x

  BiPoly derivative_x() const;
  BiPoly derivative_y() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rational& c, BiPoly p);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  BiPoly pow(unsigned e) const;

  // Canonical text form: graded-lex descending (x > y), explicit ^ and *.
  std::string to_string() const;

 private:
  std::map<Key, Rational> terms_;
};

int ord2(const BiPoly& f);
BiPoly homog_component(const BiPoly& f, int k);

// True iff the y^m coefficient of the lowest form is nonzero, m = ord2(f).
// Rejects the zero polynomial.
bool is_y_regular(const BiPoly& f);

BiPoly shear_x(const BiPoly& f, const Rational& c);  // f(x + c*y, y)
BiPoly shear_y(const BiPoly& f);                     // f(x, x + y)
BiPoly translate(const BiPoly& f, const Rational& a, const Rational& b);  // f(x+a, y+b)
BiPoly flip_x(const BiPoly& f);                      // f(-x, y)

// F_{f,g} = f_x g_y - f_y g_x.
BiPoly jacobian_det(const BiPoly& f, const BiPoly& g);
// G_{f,g} = y (g f_x - f g_x) - x (g f_y - f g_y), origin-centered.
BiPoly tangency_poly(const BiPoly& f, const BiPoly& g);

// Greatest common divisor in Q[x,y], integer-primitive with positive leading
// coefficient in graded-lex order. gcd2(0, 0) = 0.
BiPoly gcd2(const BiPoly& f, const BiPoly& g);

// Exact division; throws std::domain_error when d does not divide f.
BiPoly div2_exact(const BiPoly& f, const BiPoly& d);

// Product of the distinct irreducible factors, same normalization as gcd2.
// Rejects the zero polynomial.
BiPoly squarefree_part2(const BiPoly& f);

// f + c (x^{mN} + y^{mN}); square-free with unchanged truncated root sets at
// level N. Requires f y-regular of order m > 0, m*N > deg f, c != 0.
BiPoly squarefree_regularize(const BiPoly& f, int N, const Rational& c);

// ((d-1)^2 + 1)/2; exponent level below which truncated roots separate.
Rational truncation_bound(int d);

// Gcd in Q[x] of the y-coefficients; zero polynomial has zero content.
UniPoly content_in_x(const BiPoly& f);

// Resultant with respect to y, an element of Q[x].
UniPoly resultant_y(const BiPoly& f, const BiPoly& g);

}  // namespace bilim
