#pragma once

#include <optional>
#include <utility>

#include "bilim/algebraic.hpp"
#include "bilim/bipoly.hpp"
#include "bilim/puiseux.hpp"
#include "bilim/rational.hpp"

namespace bilim {

// Extended real number: a tower element together with a -inf/finite/+inf
// tag. Totally ordered; finite values compare exactly via alg_compare.
struct ExtReal {
  int tag = 0;    // -1 below every real, 0 finite, +1 above every real
  AlgNum value;   // meaningful only when tag == 0

  static ExtReal neg_inf() { return ExtReal{-1, AlgNum()}; }
  static ExtReal pos_inf() { return ExtReal{+1, AlgNum()}; }
  static ExtReal finite(AlgNum v) { return ExtReal{0, std::move(v)}; }
  bool is_finite() const { return tag == 0; }
};

// Sign of a - b in the extended order.
int ext_compare(const ExtReal& a, const ExtReal& b);

// Closed interval of subsequential limit values; min <= max.
struct RangeInterval {
  ExtReal min;
  ExtReal max;
};

enum class LimitKind { exists_finite, infinite, does_not_exist };

// Bookkeeping reported alongside a verdict: the x-shear constant that
// regularized the pair (unset when none was needed), the isolation-test
// level M, the branch expansion level N, how many critical branches
// contributed candidate values, and whether the denominator's zero at the
// point is isolated.
struct Diagnostics {
  std::optional<Rational> shear_c;
  int level_M = 0;
  int level_N = 0;
  int branch_count = 0;
  bool isolated_zero = false;
};

// Verdict for lim f/g at a point. exists_finite carries the value,
// infinite the sign of the divergence; `range` holds [MIN, MAX] of the
// subsequential limits whenever the isolated-zero path computed it, and a
// finite limit then satisfies range = [value, value].
struct LimitOutcome {
  LimitKind kind = LimitKind::does_not_exist;
  AlgNum value;      // set when kind == exists_finite
  int inf_sign = 0;  // set when kind == infinite
  std::optional<RangeInterval> range;
  Diagnostics diag;
};

// Limit of f/g along one branch as x -> 0 on the branch's side.
struct BranchLimit {
  PuiseuxBranch branch;
  ExtReal value;
};

// Limit of f(x, branch(x)) / g(x, branch(x)) as x -> 0 on the branch's
// side, read off the exact orders and leading coefficients of the two
// substitutions: 0 when f's order is larger (or f vanishes identically
// along the branch), the leading-coefficient ratio on equal orders, a
// signed infinity when g's order is larger. The branch must not lie on g
// (std::invalid_argument).
BranchLimit branch_limit(const BiPoly& f, const BiPoly& g,
                         const PuiseuxBranch& branch);

// True iff the origin is an isolated point of the real zero set of g: g has
// no real branches through it on either side at the certified separation
// level, and the y-axis is not contained in the zero set. Requires g != 0
// with g(0,0) = 0; shears internally when g is not y-regular.
bool isolated_zero_test(const BiPoly& g);

// True iff lim f/g = 0 at the origin, for f, g vanishing there, g with an
// isolated zero, and Jacobian determinant F = f_x g_y - f_y g_x nonzero:
// the order of f strictly exceeds the order of g along every real branch
// of F that does not lie on f. Shears internally as needed; throws
// std::invalid_argument when F == 0 (that case is decided along the y-axis
// by limit_F_degenerate).
bool limit_zero_isolated(const BiPoly& f, const BiPoly& g);

// Limit when the Jacobian determinant of (f, g) vanishes identically: f and
// g are then functionally dependent near the origin, so the limit over the
// punctured plane equals the limit along the y-axis, decided by comparing
// the orders and lowest coefficients of f(0,y) and g(0,y). A finite value
// yields exists_finite, otherwise infinite; the singleton range is attached
// either way. Requires g with an isolated zero at the origin; in particular
// g(0,y) != 0 (std::invalid_argument otherwise).
LimitOutcome limit_F_degenerate(const BiPoly& f, const BiPoly& g);

// True iff lim f/g = 0 at the origin, with no isolation assumption on g and
// f, g not necessarily coprime. Criterion: ord f > ord g; the order of f
// beats the order of g along every real branch of the tangency curve
// G = y (g f_x - f g_x) - x (g f_y - f g_y) lying on neither f nor g; and
// every real branch of g lies on f with strictly larger multiplicity, or
// with equal multiplicity and a strictly larger generic perturbation order.
// G == 0 reduces the test to the order comparison alone. Shears internally.
bool exists_zero_general(const BiPoly& f, const BiPoly& g);

// The closed interval [MIN, MAX] of subsequential limits of f/g at the
// origin, for f, g vanishing there, g with an isolated zero, and Jacobian
// determinant F != 0 (std::invalid_argument otherwise): extremes of
// branch_limit over the real branches of F off f, together with 0 whenever
// f has real branches of its own. Shears internally as needed.
RangeInterval range_isolated(const BiPoly& f, const BiPoly& g);

// Decide lim f/g at (a, b): translate to the origin, cancel the common
// factor, shortcut when the reduced denominator does not vanish, and
// otherwise classify through the isolated-zero test, the degenerate-F path,
// or the branch range; the limit exists iff MIN = MAX is finite. A
// non-isolated denominator zero yields does_not_exist with no range.
// Throws std::invalid_argument when g == 0.
LimitOutcome bilimit(const BiPoly& f, const BiPoly& g, const Rational& a,
                     const Rational& b);

}  // namespace bilim
