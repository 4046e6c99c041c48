#pragma once

#include "milnor/integer.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace milnor {

// Numbered Coxeter-Dynkin diagram. Vertices are 1..mu; an edge (i,j), i<j,
// carries w = <delta_i, delta_j> != 0. |w| is the edge multiplicity and the
// edges are dashed when w < 0.
class Diagram {
 public:
  using Key = std::pair<int, int>;

  Diagram() = default;
  explicit Diagram(std::size_t mu) : mu_(mu) {}

  std::size_t mu() const noexcept { return mu_; }
  const std::map<Key, Integer>& weights() const noexcept { return weights_; }

  // Order of i and j does not matter; a zero weight erases the edge.
  void set_weight(int i, int j, const Integer& w);
  Integer weight(int i, int j) const;
  bool adjacent(int i, int j) const { return weight(i, j) != 0; }

  std::size_t degree(int v) const;
  std::size_t edge_count() const noexcept { return weights_.size(); }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::size_t mu_ = 0;
  std::map<Key, Integer> weights_;
};

struct EdgeDifference {
  int i = 0;
  int j = 0;
  Integer expected;
  Integer actual;
};

Diagram diagram_from_gram(const IntMatrix& gram);
// Symmetric completion with diagonal -2.
IntMatrix gram_from_diagram(const Diagram& d);

// Strict numbered equality, no isomorphism quotient.
bool diagrams_equal(const Diagram& a, const Diagram& b);
// First differing edge in (i,j) order; nullopt when equal. A rank mismatch is
// reported as the pair (0,0) with the two ranks as weights.
std::optional<EdgeDifference> first_difference(const Diagram& expected, const Diagram& actual);
std::string describe(const EdgeDifference& d);

// Negates the given 1-based vertices (the effect of the corresponding Gamma moves).
Diagram with_sign_flips(const Diagram& d, std::span<const int> flips);

// All monotone cycles: i_1 < ... < i_k, k >= 3, consecutive vertices adjacent
// and i_k adjacent to i_1. Sorted lexicographically.
std::vector<std::vector<int>> monotone_cycles(const Diagram& d);

// After the sign flips the diagram must have exactly one negative edge, and
// deleting it must leave no monotone cycle.
bool minimality_check(const Diagram& d, std::span<const int> sign_flips);

std::string to_dot(const Diagram& d, const std::string& name = "diagram");

}  // namespace milnor
