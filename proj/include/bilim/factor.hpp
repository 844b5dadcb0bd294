#pragma once

#include <vector>

#include "bilim/upoly.hpp"

namespace bilim {

// Distinct irreducible factors of the square-free part of p over Q, each
// integer-primitive with positive leading coefficient, sorted by degree then
// coefficient sequence. Constants give an empty list; zero is rejected.
std::vector<UniPoly> irreducible_factors(const UniPoly& p);

}  // namespace bilim
