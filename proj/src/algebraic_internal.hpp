#pragma once

#include <optional>
#include <vector>

#include "bilim/algebraic.hpp"

// Shared internals of the algebraic-number engine; not part of the library
// interface.
namespace bilim::detail {

size_t tower_size(const Tower& t);
// First n levels as a tower; null when n == 0.
Tower tower_slice(const Tower& t, size_t n);
std::vector<IntervalQ> tower_box(const Tower& t);
// One bisection step on level j (1-based); point levels are left alone.
Tower refine_level(const Tower& t, size_t j);
Tower refine_all(const Tower& t);
// Normal form modulo the triangular system: degree in every v_j below the
// degree of the level-j defining polynomial.
MPoly tower_reduce(MPoly p, const std::vector<TowerLevel>& levels);
// True when the reduced polynomial vanishes at the tower's root point.
bool mpoly_value_zero(const Tower& t, const MPoly& p);

// Towers of two operands joined along their common prefix; the second
// operand's variables above `common` move up by `shift`.
struct MergedTowers {
  Tower tower;
  int common;
  int shift;
};
MergedTowers merge_towers(const Tower& ta, const Tower& tb);

// Value-trimmed view: structural degree equals the degree as a value.
APoly apoly_trim_value(const APoly& p);
// a = q*b + r with structural degree of r below the value degree of b;
// b must be nonzero as a value.
void apoly_divmod_field(const APoly& a, const APoly& b, APoly& q, APoly& r);
// Monic gcd over the field generated by the towers; zero iff both are zero
// as values.
APoly apoly_gcd_field(APoly a, APoly b);

// Reduced inverse 1/a with trivial denominator, via a half-extended Euclid
// against the top defining polynomial. Fails only when that polynomial
// splits at the top level (shares a factor with a's numerator); a must be
// nonzero and non-rational.
std::optional<AlgNum> tower_try_inverse(const AlgNum& a);

}  // namespace bilim::detail
