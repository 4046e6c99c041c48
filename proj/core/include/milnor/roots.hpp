#pragma once

#include "milnor/integer.hpp"
#include "milnor/lattice.hpp"

#include <vector>

namespace milnor {

// Positive roots of the finite root system whose simple roots have the given
// Gram matrix (symmetric, diagonal -2, negative definite). Coordinates are
// with respect to the simple roots. Sorted by height, then lexicographically.
// Throws ShapeError on malformed input and NotFiniteTypeError when the form
// is not negative definite.
std::vector<LatticeVector> positive_roots(const IntMatrix& simple_gram);

// The unique positive root of maximal height.
LatticeVector highest_root(const IntMatrix& simple_gram);

Integer height(const LatticeVector& root);

bool negative_definite(const IntMatrix& gram);

}  // namespace milnor
