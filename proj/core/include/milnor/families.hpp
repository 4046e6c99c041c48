#pragma once

#include "milnor/diagram.hpp"
#include "milnor/lattice.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace milnor {

// The four diagram families used throughout:
//   GabrielovT  star with a double dashed top edge at the centre, mu = p+q+r-1
//   T           the same graph renumbered with centre 1 and top vertex mu
//   Abb15       exceptional unimodal shape, mu = p+q+r
//   S           Abb15 renumbered; positions 1,2,3 carry the (-2,-2,0,1) triple
enum class Family { GabrielovT, T, Abb15, S };

struct FamilySpec {
  Family family = Family::T;
  int p = 2;
  int q = 2;
  int r = 2;

  std::size_t mu() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct FamilyInstance {
  Lattice lattice;
  Basis basis;
  Diagram diagram;
};

// Throws FamilyParamError when any of p, q, r is below 2.
FamilyInstance build_family(const FamilySpec& spec);

std::string family_name(Family f);
// Accepts "GabrielovT", "T", "Abb15", "S" (case-insensitive).
Family parse_family(std::string_view name);

}  // namespace milnor
