#include "milnor/diagram.hpp"

#include "milnor/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace milnor {

namespace {

Diagram::Key ordered(int i, int j) { return i < j ? Diagram::Key{i, j} : Diagram::Key{j, i}; }

}  // namespace

void Diagram::set_weight(int i, int j, const Integer& w) {
  if (i == j || i < 1 || j < 1 || static_cast<std::size_t>(std::max(i, j)) > mu_)
    throw DimensionError("edge (" + std::to_string(i) + "," + std::to_string(j) + ") invalid for mu = " +
                         std::to_string(mu_));
  const Key k = ordered(i, j);
  if (w == 0)
    weights_.erase(k);
  else
    weights_[k] = w;
}

Integer Diagram::weight(int i, int j) const {
  if (i == j) return -2;
  auto it = weights_.find(ordered(i, j));
  return it == weights_.end() ? Integer(0) : it->second;
}

std::size_t Diagram::degree(int v) const {
  return static_cast<std::size_t>(std::count_if(weights_.begin(), weights_.end(), [v](const auto& kv) {
    return kv.first.first == v || kv.first.second == v;
  }));
}

Diagram diagram_from_gram(const IntMatrix& gram) {
  if (!gram.square()) throw ShapeError("Gram matrix is not square");
  if (!gram.symmetric()) throw ShapeError("Gram matrix is not symmetric");
  const std::size_t mu = gram.rows();
  Diagram d(mu);
  for (std::size_t i = 0; i < mu; ++i) {
    if (gram(i, i) != -2) throw ShapeError("Gram diagonal entry " + std::to_string(i + 1) + " is not -2");
    for (std::size_t j = i + 1; j < mu; ++j)
      if (gram(i, j) != 0) d.set_weight(static_cast<int>(i + 1), static_cast<int>(j + 1), gram(i, j));
  }
  return d;
}

IntMatrix gram_from_diagram(const Diagram& d) {
  const std::size_t mu = d.mu();
  IntMatrix g(mu, mu);
  for (std::size_t i = 0; i < mu; ++i) g(i, i) = -2;
  for (const auto& [key, w] : d.weights()) {
    const auto i = static_cast<std::size_t>(key.first - 1);
    const auto j = static_cast<std::size_t>(key.second - 1);
    g(i, j) = w;
    g(j, i) = w;
  }
  return g;
}

bool diagrams_equal(const Diagram& a, const Diagram& b) { return a == b; }

std::optional<EdgeDifference> first_difference(const Diagram& expected, const Diagram& actual) {
  if (expected.mu() != actual.mu())
    return EdgeDifference{0, 0, Integer(expected.mu()), Integer(actual.mu())};
  std::set<Diagram::Key> keys;
  for (const auto& kv : expected.weights()) keys.insert(kv.first);
  for (const auto& kv : actual.weights()) keys.insert(kv.first);
  for (const auto& [i, j] : keys) {
    Integer e = expected.weight(i, j);
    Integer a = actual.weight(i, j);
    if (e != a) return EdgeDifference{i, j, e, a};
  }
  return std::nullopt;
}

std::string describe(const EdgeDifference& d) {
  std::ostringstream os;
  if (d.i == 0)
    os << "rank differs: expected mu = " << d.expected << ", got " << d.actual;
  else
    os << "edge (" << d.i << "," << d.j << "): expected " << d.expected << ", got " << d.actual;
  return os.str();
}

Diagram with_sign_flips(const Diagram& d, std::span<const int> flips) {
  std::vector<bool> flipped(d.mu() + 1, false);
  for (int v : flips) {
    if (v < 1 || static_cast<std::size_t>(v) > d.mu())
      throw MoveRangeError("sign flip index " + std::to_string(v) + " out of range");
    flipped[static_cast<std::size_t>(v)] = !flipped[static_cast<std::size_t>(v)];
  }
  Diagram out(d.mu());
  for (const auto& [key, w] : d.weights()) {
    const bool neg = flipped[static_cast<std::size_t>(key.first)] != flipped[static_cast<std::size_t>(key.second)];
    out.set_weight(key.first, key.second, neg ? Integer(-w) : w);
  }
  return out;
}

std::vector<std::vector<int>> monotone_cycles(const Diagram& d) {
  const int mu = static_cast<int>(d.mu());
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::function<void(int)> extend = [&](int v) {
    if (path.size() >= 3 && d.adjacent(v, path.front())) cycles.push_back(path);
    for (int w = v + 1; w <= mu; ++w) {
      if (!d.adjacent(v, w)) continue;
      path.push_back(w);
      extend(w);
      path.pop_back();
    }
  };
  for (int start = 1; start <= mu; ++start) {
    path.assign(1, start);
    extend(start);
  }
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  return cycles;
}

bool minimality_check(const Diagram& d, std::span<const int> sign_flips) {
  Diagram flipped = with_sign_flips(d, sign_flips);
  std::optional<Diagram::Key> negative;
  for (const auto& [key, w] : flipped.weights()) {
    if (w >= 0) continue;
    if (negative) return false;
    negative = key;
  }
  if (!negative) return false;
  flipped.set_weight(negative->first, negative->second, 0);
  return monotone_cycles(flipped).empty();
}

std::string to_dot(const Diagram& d, const std::string& name) {
  std::ostringstream os;
  os << "graph \"";
  for (char c : name) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << "\" {\n";
  os << "  node [shape=circle];\n";
  for (std::size_t v = 1; v <= d.mu(); ++v) os << "  " << v << " [label=\"" << v << "\"];\n";
  for (const auto& [key, w] : d.weights()) {
    const Integer count = w < 0 ? Integer(-w) : w;
    for (Integer c = 0; c < count; ++c) {
      os << "  " << key.first << " -- " << key.second;
      if (w < 0) os << " [style=dashed]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace milnor
