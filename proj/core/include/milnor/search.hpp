#pragma once

#include "milnor/braid.hpp"
#include "milnor/integer.hpp"
#include "milnor/lattice.hpp"

#include <optional>
#include <vector>

namespace milnor {

enum class SearchMode { GramOnly, ExactBasis };

// Inclusive index range of one generator kind; hi < 0 means "up to the
// largest index valid for mu".
struct MoveRange {
  MoveKind kind = MoveKind::Alpha;
  int lo = 1;
  int hi = -1;
};

struct SearchProblem {
  Basis start;
  IntMatrix target_gram;               // used in GramOnly mode
  std::optional<IntMatrix> target_rows;  // required in ExactBasis mode
  int max_depth = 0;
  std::vector<MoveRange> move_set;     // empty: every Alpha, Beta and Gamma
  SearchMode mode = SearchMode::GramOnly;
};

// Allowed generators for rank mu in canonical order (Alpha < Beta < Gamma, then index).
std::vector<Move> expand_move_set(const std::vector<MoveRange>& ranges, std::size_t mu);

// Shortest word reaching the target, ties broken by the lexicographic order
// of the canonical move encoding; nullopt when no word of length <= max_depth
// exists. The result is replayed on `start` before being returned.
std::optional<MoveSeq> find_sequence(const SearchProblem& problem);

}  // namespace milnor
