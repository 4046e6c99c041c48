#include "milnor/search.hpp"

#include "milnor/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace milnor {

std::vector<Move> expand_move_set(const std::vector<MoveRange>& ranges, std::size_t mu) {
  std::vector<MoveRange> all = ranges;
  if (all.empty()) all = {{MoveKind::Alpha, 1, -1}, {MoveKind::Beta, 2, -1}, {MoveKind::Gamma, 1, -1}};
  std::vector<Move> moves;
  for (const auto& r : all) {
    const int lo = std::max(r.lo, min_index(r.kind));
    const int hi = r.hi < 0 ? max_index(r.kind, mu) : std::min(r.hi, max_index(r.kind, mu));
    for (int i = lo; i <= hi; ++i) moves.push_back({r.kind, i});
  }
  std::sort(moves.begin(), moves.end());
  moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
  return moves;
}

namespace {

void append_integer(std::string& out, const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    const auto v = static_cast<std::uint64_t>(x.convert_to<std::int64_t>());
    out.push_back('i');
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    return;
  }
  std::vector<unsigned char> bytes;
  boost::multiprecision::export_bits(x < 0 ? Integer(-x) : x, std::back_inserter(bytes), 8);
  out.push_back(x < 0 ? 'n' : 'p');
  const auto len = static_cast<std::uint32_t>(bytes.size());
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((len >> (8 * b)) & 0xff));
  out.append(bytes.begin(), bytes.end());
}

// Gram matrices: only the strict upper triangle varies.
struct GramSpace {
  using State = IntMatrix;
  State step(const State& s, Move m) const { return apply_move_to_gram(s, m); }
  std::string key(const State& s) const {
    std::string k;
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = i + 1; j < s.cols(); ++j) append_integer(k, s(i, j));
    return k;
  }
};

struct BasisSpace {
  using State = Basis;
  State step(const State& s, Move m) const { return apply_move(s, m); }
  std::string key(const State& s) const {
    std::string k;
    for (std::size_t i = 0; i < s.rows().rows(); ++i)
      for (std::size_t j = 0; j < s.rows().cols(); ++j) append_integer(k, s.rows()(i, j));
    return k;
  }
};

template <class Space>
class Bidirectional {
 public:
  using State = typename Space::State;

  Bidirectional(Space space, std::vector<Move> moves) : space_(std::move(space)), moves_(std::move(moves)) {
    for (Move m : moves_) inverse_moves_.push_back(inverse_move(m));
  }

  std::optional<std::vector<Move>> run(const State& start, const State& target, int max_depth) {
    fwd_layers_.assign(1, {start});
    bwd_layers_.assign(1, {target});
    fwd_depth_.clear();
    bwd_depth_.clear();
    fwd_depth_.emplace(space_.key(start), 0);
    bwd_depth_.emplace(space_.key(target), 0);
    if (fwd_depth_.count(space_.key(target))) return std::vector<Move>{};

    int f = 0, b = 0;
    while (f + b < max_depth) {
      const bool forward = fwd_layers_.back().size() <= bwd_layers_.back().size();
      bool met = false;
      bool grew = forward ? expand(fwd_layers_, fwd_depth_, bwd_depth_, moves_, ++f, met)
                          : expand(bwd_layers_, bwd_depth_, fwd_depth_, inverse_moves_, ++b, met);
      if (met) return reconstruct(start, f, b);
      if (!grew) return std::nullopt;  // one side's reachable set is closed
    }
    return std::nullopt;
  }

 private:
  using DepthMap = std::unordered_map<std::string, int>;

  bool expand(std::vector<std::vector<State>>& layers, DepthMap& own, const DepthMap& other,
              const std::vector<Move>& moves, int depth, bool& met) {
    std::vector<State> next;
    for (const State& s : layers.back()) {
      for (Move m : moves) {
        State t = space_.step(s, m);
        std::string k = space_.key(t);
        if (own.count(k)) continue;
        if (other.count(k)) met = true;
        own.emplace(std::move(k), depth);
        next.push_back(std::move(t));
      }
    }
    const bool grew = !next.empty();
    layers.push_back(std::move(next));
    return grew;
  }

  // Lexicographically smallest word among all words of length f + b.
  std::vector<Move> reconstruct(const State& start, int f, int b) {
    const int total = f + b;
    // good[t]: states at forward depth t that lie on some shortest path.
    std::vector<std::unordered_set<std::string>> good(static_cast<std::size_t>(f) + 1);
    for (const State& s : fwd_layers_[static_cast<std::size_t>(f)]) {
      std::string k = space_.key(s);
      auto it = bwd_depth_.find(k);
      if (it != bwd_depth_.end() && it->second == b) good[static_cast<std::size_t>(f)].insert(std::move(k));
    }
    for (int t = f - 1; t >= 0; --t) {
      const auto& upper = good[static_cast<std::size_t>(t) + 1];
      for (const State& s : fwd_layers_[static_cast<std::size_t>(t)]) {
        for (Move m : moves_) {
          if (upper.count(space_.key(space_.step(s, m)))) {
            good[static_cast<std::size_t>(t)].insert(space_.key(s));
            break;
          }
        }
      }
    }

    std::vector<Move> word;
    State x = start;
    for (int t = 0; t < total; ++t) {
      bool advanced = false;
      for (Move m : moves_) {
        State y = space_.step(x, m);
        const std::string k = space_.key(y);
        bool ok;
        if (t + 1 <= f) {
          ok = good[static_cast<std::size_t>(t) + 1].count(k) > 0;
        } else {
          auto it = bwd_depth_.find(k);
          ok = it != bwd_depth_.end() && it->second == total - t - 1;
        }
        if (ok) {
          word.push_back(m);
          x = std::move(y);
          advanced = true;
          break;
        }
      }
      if (!advanced) throw std::logic_error("search reconstruction lost the shortest path");
    }
    return word;
  }

  Space space_;
  std::vector<Move> moves_;
  std::vector<Move> inverse_moves_;
  std::vector<std::vector<State>> fwd_layers_;
  std::vector<std::vector<State>> bwd_layers_;
  DepthMap fwd_depth_;
  DepthMap bwd_depth_;
};

}  // namespace

std::optional<MoveSeq> find_sequence(const SearchProblem& problem) {
  const Basis& start = problem.start;
  const std::size_t mu = start.size();
  if (problem.max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
  const std::vector<Move> moves = expand_move_set(problem.move_set, mu);
  if (moves.empty()) throw std::invalid_argument("move set is empty for mu = " + std::to_string(mu));

  std::optional<std::vector<Move>> word;
  if (problem.mode == SearchMode::GramOnly) {
    const IntMatrix& target = problem.target_gram;
    if (target.rows() != mu || target.cols() != mu)
      throw DimensionError("target Gram matrix is not " + std::to_string(mu) + "x" + std::to_string(mu));
    if (!target.symmetric()) throw ShapeError("target Gram matrix is not symmetric");
    for (std::size_t i = 0; i < mu; ++i)
      if (target(i, i) != -2) throw ShapeError("target Gram diagonal must be -2");
    Bidirectional<GramSpace> engine(GramSpace{}, moves);
    word = engine.run(gram_of_basis(start), target, problem.max_depth);
  } else {
    if (!problem.target_rows) throw std::invalid_argument("exact-basis search needs target rows");
    const IntMatrix& rows = *problem.target_rows;
    if (rows.rows() != mu || rows.cols() != mu)
      throw DimensionError("target rows are not " + std::to_string(mu) + "x" + std::to_string(mu));
    const Basis target(start.lattice_ptr(), rows);
    Bidirectional<BasisSpace> engine(BasisSpace{}, moves);
    word = engine.run(start, target, problem.max_depth);
  }
  if (!word) return std::nullopt;

  MoveSeq seq{std::move(*word), {}};
  const Basis reached = apply_sequence(start, seq);
  const bool sound = problem.mode == SearchMode::GramOnly ? gram_of_basis(reached) == problem.target_gram
                                                         : reached.rows() == *problem.target_rows;
  if (!sound) throw std::logic_error("search produced a word that does not reach the target");
  return seq;
}

}  // namespace milnor
