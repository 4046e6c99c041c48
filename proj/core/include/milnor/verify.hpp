#pragma once

#include "milnor/braid.hpp"
#include "milnor/diagram.hpp"
#include "milnor/families.hpp"
#include "milnor/integer.hpp"
#include "milnor/lattice.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace milnor {

using StageValue = std::variant<Diagram, IntMatrix, Integer>;

struct Stage {
  std::string label;
  StageValue expected;
  StageValue actual;
  bool equal = false;
};

struct VerificationReport {
  std::string name;
  bool passed = true;
  std::vector<Stage> stages;
  std::string notes;

  // Appends a stage; `passed` stays the conjunction of all stage equalities.
  const Stage& add_stage(std::string label, StageValue expected, StageValue actual);
  void note(const std::string& line);
};

// ---------------------------------------------------------------------------
// The rank-3 triple with intersection matrix
//   -2 -2  0
//   -2 -2  1
//    0  1 -2
IntMatrix triple_gram();
Basis triple_basis();

// Closed form of the intersection matrix of beta_2^k applied to the triple.
IntMatrix triple_orbit_gram(int k);

// Replays beta_2 on the triple for k = 0..k_max against triple_orbit_gram.
VerificationReport check_triple_orbit(int k_max);

// f1 = d1 - d2, f2 = d1 - d2 - d3 span a unimodular hyperbolic plane.
VerificationReport check_triple_hyperbolic_plane();

// ---------------------------------------------------------------------------
// Orbits of beta_2 with a fixed diagram (GabrielovT families, k_max even).
VerificationReport check_same_diagram_orbit(const FamilySpec& spec, int k_max);

// Readings of the permutation word "b5, b4; b4, b3; b3, b2".
enum class PermutationReading { AsWritten, GroupsReversedInside, GroupsReversedOrder, FullyReversed };
std::string reading_name(PermutationReading r);
MoveSeq permutation_word(PermutationReading r);

// ---------------------------------------------------------------------------
enum class OrderingVariant { GabrielovToT, Kluitmann, Abb15ToS };
// Accepts "gabrielov-to-t"/"eq2", "kluitmann", "abb15-to-s"/"abb15_to_S".
OrderingVariant parse_ordering_variant(std::string_view name);
std::string variant_name(OrderingVariant v);

// Word renumbering the GabrielovT(p,q,r) diagram into T(p,q,r).
MoveSeq gabrielov_to_t_word(int p, int q, int r);
// Word turning Abb15(p,q,r) into S(p,q,r) (independent of p,q,r).
MoveSeq abb15_to_s_word();

VerificationReport check_ordering(OrderingVariant variant, int p, int q, int r);

// ---------------------------------------------------------------------------
// T_{4,3,3} -> S_{3,3,3}, T_{5,4,2} -> S_{2,4,4}, T_{7,3,2} -> S_{2,3,6}.
enum class TsCase { T433, T542, T732 };
inline constexpr std::array<TsCase, 3> kTsCases{TsCase::T433, TsCase::T542, TsCase::T732};
TsCase parse_ts_case(std::string_view name);
std::string case_name(TsCase c);

struct FixtureStage {
  std::string label;
  MoveSeq word;
  std::optional<Diagram> expected;  // absent for the final stage (target family)
};

struct TsFixture {
  FamilySpec source;
  FamilySpec target;
  std::array<FixtureStage, 3> stages;
  std::vector<int> minimality_flips;  // orientation changes on the first intermediate diagram
};

// Loaded once from the embedded fixture data.
const TsFixture& ts_fixture(TsCase c);

VerificationReport check_t_to_s(TsCase c);
VerificationReport check_minimality(TsCase c);

// Inside T_{p,q,r}: simple roots {1, 4, ..., p+q+r-2}, e the highest root,
// f1 = e + d3, f2 = e + d2 + d3, d = d_{p+q+r-1} - d1.
VerificationReport check_e_hyperbolic_plane(TsCase c);
// 1-based vertices of the E-type sub-diagram of T_{p,q,r}.
std::vector<std::size_t> e_subdiagram_vertices(const FamilySpec& t_spec);

// ---------------------------------------------------------------------------
struct Witness {
  Basis basis;
  MoveSeq word;
  std::pair<int, int> pair;  // 1-based positions whose pairing equals m
};

// Basis obtained from the triple by beta_2^{|m|} (and gamma_1 if needed) whose
// entry (1,3) equals m.
Witness witness_with_intersection(const Integer& m);
// Same word applied to `start`, whose first three elements must carry the
// triple intersection matrix.
Witness witness_with_intersection(const Basis& start, const Integer& m);

// Report form of the witness: entry (1,3) of the witness basis equals m.
VerificationReport check_witness(const Integer& m);

// Random words (length <= max_length, fixed seed) applied to the family's
// identity basis; every off-diagonal Gram entry met along the way must lie
// in {0, +-1, +-2}. Meant for the semidefinite T families.
VerificationReport check_entry_bound(const FamilySpec& spec, int orbit_count, int max_length, std::uint64_t seed);

// Every named check with its default arguments.
std::vector<VerificationReport> run_all_checks();

}  // namespace milnor
