#pragma once

#include "milnor/integer.hpp"
#include "milnor/lattice.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace milnor {

// Declaration order is the canonical move order used for tie-breaking.
enum class MoveKind { Alpha, Beta, Gamma };

// A generator of the braid/sign group acting on distinguished bases.
//   Alpha i  (1 <= i <= mu-1): swap positions i,i+1 through s_{delta_i}
//   Beta  i  (2 <= i <= mu):   inverse of Alpha i-1
//   Gamma i  (1 <= i <= mu):   negate delta_i
struct Move {
  MoveKind kind = MoveKind::Alpha;
  int index = 1;

  static Move alpha(int i) { return {MoveKind::Alpha, i}; }
  static Move beta(int i) { return {MoveKind::Beta, i}; }
  static Move gamma(int i) { return {MoveKind::Gamma, i}; }

  friend auto operator<=>(const Move&, const Move&) = default;
};

// A word in the generators. `group_marks` are the move positions at which a
// new ';'-separated group begins; they are cosmetic only.
struct MoveSeq {
  std::vector<Move> moves;
  std::vector<std::size_t> group_marks;

  std::size_t size() const noexcept { return moves.size(); }
  bool empty() const noexcept { return moves.empty(); }

  friend bool operator==(const MoveSeq&, const MoveSeq&) = default;
};

std::string to_string(Move m);

// Smallest index allowed for the kind, independent of mu.
int min_index(MoveKind kind) noexcept;
// Largest index allowed for the kind in rank mu.
int max_index(MoveKind kind, std::size_t mu) noexcept;
bool valid_for(Move m, std::size_t mu) noexcept;

// Throws MoveRangeError when m is not a valid generator in rank mu.
void validate(Move m, std::size_t mu);

Move inverse_move(Move m);
// Reversed word of inverses; group marks are dropped.
MoveSeq inverse_sequence(const MoveSeq& s);

Basis apply_move(const Basis& b, Move m);
Basis apply_sequence(const Basis& b, std::span<const Move> moves);
inline Basis apply_sequence(const Basis& b, const MoveSeq& s) { return apply_sequence(b, s.moves); }

// The induced action on intersection matrices:
// gram_of_basis(apply_move(b, m)) == apply_move_to_gram(gram_of_basis(b), m).
IntMatrix apply_move_to_gram(const IntMatrix& gram, Move m);
IntMatrix apply_sequence_to_gram(const IntMatrix& gram, std::span<const Move> moves);

// Matrix (on reference coordinates, acting on column vectors) of
// s_{delta_1} o s_{delta_2} o ... o s_{delta_mu}.
IntMatrix coxeter_product(const Basis& b);

}  // namespace milnor
