#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bilim/algebraic.hpp"
#include "bilim/bipoly.hpp"
#include "bilim/rational.hpp"

namespace bilim {

// Half-branch orientation: plus parameterizes x -> 0+, minus x -> 0- (a
// minus branch of f is stored as a plus branch of f(-x, y)).
enum class Side { plus, minus };

// One term c * x^e of a real Puiseux series; c != 0 and e > 0.
struct BranchTerm {
  Rational exponent;
  AlgNum coeff;
};

// Truncated real Newton-Puiseux root y = sum of terms + O(x^truncation).
// Exponents are strictly increasing, all below `truncation`, with
// denominators dividing `ramification`. Coefficients are certified real at
// construction.
struct PuiseuxBranch {
  Side side = Side::plus;
  long ramification = 1;
  std::vector<BranchTerm> terms;
  Rational truncation;
};

// All truncated real branches of `source` on one side, pairwise distinct as
// truncated series and canonically ordered (termwise by exponent, then by
// coefficient).
struct BranchSet {
  std::vector<PuiseuxBranch> branches;
  BiPoly source;
  Rational level;
};

// Order and leading coefficient of a fractional power series in x. An
// unset order means the series is identically zero; `leading` is nonzero
// exactly when the order is set.
struct SeriesLeading {
  std::optional<Rational> order;
  AlgNum leading;
};

// The set P^side_N(f) of real Newton-Puiseux roots of f truncated below N,
// by the Newton polygon algorithm: isolate the real roots of each face's
// characteristic polynomial, extend the coefficient tower, recurse.
// Prefixes whose every continuation has a non-real next coefficient are
// dropped; prefixes reaching the truncation level are emitted once.
// Multiple roots are expanded multiplicity-blind (callers needing
// multiplicity-correct sets regularize first). Throws std::invalid_argument
// when f = 0, N <= 0, or f(0, y) vanishes identically (shear first).
BranchSet expand(const BiPoly& f, const Rational& N, Side side);

// Exact order and leading coefficient of x -> f(+-x, branch(x)) for the
// truncated branch as written (a fractional polynomial); unset order iff
// the substitution is identically zero, i.e. the branch is a full root.
SeriesLeading substitute_order(const BiPoly& f, const PuiseuxBranch& branch);

// As above for callers that only trust orders below `trust` anyway:
// monomials with x-exponent at or above that threshold are discarded while
// substituting, so the result is exact when set and comes back unset
// whenever the true order is >= trust.
SeriesLeading substitute_order(const BiPoly& f, const PuiseuxBranch& branch,
                               const Rational& trust);

// True iff the branch equals some real Newton-Puiseux root of f truncated
// at branch.truncation. Pure-x content of f is stripped first, so inputs
// like x*y^2 are accepted; callers pick a truncation level high enough for
// their use.
bool member(const BiPoly& f, const PuiseuxBranch& branch);

// Multiplicity of the branch as a Newton-Puiseux root of f, from the order
// drop between levels N and N+1 of generic-constant probes. Requires
// member(f, branch) (else std::invalid_argument), N above the separation
// bound of deg f, and the branch's terms complete below N+1.
int multiplicity(const BiPoly& f, const PuiseuxBranch& branch, int N);

// Smallest certified level M <= floor(separation bound) + 1 such that the
// real branches of f on both sides are pairwise distinct when truncated
// through exponent M and each carries a certified-real continuation.
int separation_level(const BiPoly& f);

// Canonical branch text: "y = c1*x^(p1/q1) + ... + O(x^N)", coefficients
// exact rationals or root(<minpoly in t>, [lo, hi]).
std::string branch_to_string(const PuiseuxBranch& branch);

// Exact equality as truncated series (side, truncation, terms).
bool branch_equal(const PuiseuxBranch& a, const PuiseuxBranch& b);

}  // namespace bilim
