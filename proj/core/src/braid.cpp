#include "milnor/braid.hpp"

#include "milnor/errors.hpp"

#include <algorithm>
#include <string>

namespace milnor {

std::string to_string(Move m) {
  const char* prefix = m.kind == MoveKind::Alpha ? "a" : m.kind == MoveKind::Beta ? "b" : "g";
  return prefix + std::to_string(m.index);
}

int min_index(MoveKind kind) noexcept { return kind == MoveKind::Beta ? 2 : 1; }

int max_index(MoveKind kind, std::size_t mu) noexcept {
  const int n = static_cast<int>(mu);
  return kind == MoveKind::Alpha ? n - 1 : n;
}

bool valid_for(Move m, std::size_t mu) noexcept {
  return m.index >= min_index(m.kind) && m.index <= max_index(m.kind, mu);
}

namespace {

std::string range_message(Move m, std::size_t mu) {
  return to_string(m) + " is out of range for mu = " + std::to_string(mu) + " (valid: " +
         std::to_string(min_index(m.kind)) + ".." + std::to_string(max_index(m.kind, mu)) + ")";
}

void validate_at(Move m, std::size_t mu, std::size_t pos) {
  if (!valid_for(m, mu))
    throw MoveRangeError(range_message(m, mu) + " at sequence position " + std::to_string(pos + 1), pos);
}

}  // namespace

void validate(Move m, std::size_t mu) {
  if (!valid_for(m, mu)) throw MoveRangeError(range_message(m, mu));
}

Move inverse_move(Move m) {
  switch (m.kind) {
    case MoveKind::Alpha: return Move::beta(m.index + 1);
    case MoveKind::Beta: return Move::alpha(m.index - 1);
    case MoveKind::Gamma: return m;
  }
  return m;
}

MoveSeq inverse_sequence(const MoveSeq& s) {
  MoveSeq inv;
  inv.moves.reserve(s.moves.size());
  for (auto it = s.moves.rbegin(); it != s.moves.rend(); ++it) inv.moves.push_back(inverse_move(*it));
  return inv;
}

Basis apply_move(const Basis& b, Move m) {
  validate(m, b.size());
  const Lattice& lat = b.lattice();
  const auto i = static_cast<std::size_t>(m.index);
  switch (m.kind) {
    case MoveKind::Alpha: {
      const LatticeVector di = b.element(i);
      const LatticeVector dj = b.element(i + 1);
      return b.with_elements(i, reflect(lat, di, dj), i + 1, di);
    }
    case MoveKind::Beta: {
      const LatticeVector di = b.element(i - 1);
      const LatticeVector dj = b.element(i);
      return b.with_elements(i - 1, dj, i, reflect(lat, dj, di));
    }
    case MoveKind::Gamma:
      return b.with_element(i, -b.element(i));
  }
  return b;
}

Basis apply_sequence(const Basis& b, std::span<const Move> moves) {
  Basis current = b;
  for (std::size_t pos = 0; pos < moves.size(); ++pos) {
    validate_at(moves[pos], b.size(), pos);
    current = apply_move(current, moves[pos]);
  }
  return current;
}

IntMatrix apply_move_to_gram(const IntMatrix& gram, Move m) {
  const std::size_t mu = gram.rows();
  validate(m, mu);
  IntMatrix g = gram;
  if (m.kind == MoveKind::Gamma) {
    const auto v = static_cast<std::size_t>(m.index - 1);
    for (std::size_t k = 0; k < mu; ++k) {
      if (k == v) continue;
      g(v, k) = -g(v, k);
      g(k, v) = -g(k, v);
    }
    return g;
  }
  // Positions a < b = a+1 (0-based) exchange places.
  const auto a = static_cast<std::size_t>(m.kind == MoveKind::Alpha ? m.index - 1 : m.index - 2);
  const std::size_t b = a + 1;
  const Integer c = gram(a, b);
  for (std::size_t k = 0; k < mu; ++k) {
    if (k == a || k == b) continue;
    if (m.kind == MoveKind::Alpha) {
      // new a = s_{d_a}(d_b) = d_b + c d_a, new b = d_a
      g(k, a) = gram(k, b) + c * gram(k, a);
      g(k, b) = gram(k, a);
    } else {
      // new a = d_b, new b = s_{d_b}(d_a) = d_a + c d_b
      g(k, a) = gram(k, b);
      g(k, b) = gram(k, a) + c * gram(k, b);
    }
    g(a, k) = g(k, a);
    g(b, k) = g(k, b);
  }
  g(a, b) = -c;
  g(b, a) = -c;
  return g;
}

IntMatrix apply_sequence_to_gram(const IntMatrix& gram, std::span<const Move> moves) {
  IntMatrix g = gram;
  for (std::size_t pos = 0; pos < moves.size(); ++pos) {
    validate_at(moves[pos], g.rows(), pos);
    g = apply_move_to_gram(g, moves[pos]);
  }
  return g;
}

IntMatrix coxeter_product(const Basis& b) {
  const std::size_t mu = b.size();
  const IntMatrix& g = b.lattice().ref_gram();
  IntMatrix product = IntMatrix::identity(mu);
  for (std::size_t i = 1; i <= mu; ++i) {
    // s_d = I + d (d^T G) on column vectors.
    const LatticeVector d = b.element(i);
    std::vector<Integer> dg(mu);
    for (std::size_t j = 0; j < mu; ++j)
      for (std::size_t k = 0; k < mu; ++k) dg[j] += d[k] * g(k, j);
    IntMatrix s = IntMatrix::identity(mu);
    for (std::size_t r = 0; r < mu; ++r)
      for (std::size_t c = 0; c < mu; ++c) s(r, c) += d[r] * dg[c];
    product = product * s;
  }
  return product;
}

}  // namespace milnor
