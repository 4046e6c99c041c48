#include "milnor/roots.hpp"

#include "milnor/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace milnor {

bool negative_definite(const IntMatrix& gram) {
  // Sylvester: every leading principal minor of -gram is positive.
  const std::size_t n = gram.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = -gram(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

Integer height(const LatticeVector& root) {
  Integer h = 0;
  for (const auto& c : root.coords()) h += c;
  return h;
}

std::vector<LatticeVector> positive_roots(const IntMatrix& simple_gram) {
  if (!simple_gram.square() || simple_gram.rows() == 0) throw ShapeError("simple-root Gram matrix must be square");
  if (!simple_gram.symmetric()) throw ShapeError("simple-root Gram matrix is not symmetric");
  const std::size_t n = simple_gram.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (simple_gram(i, i) != -2) throw ShapeError("simple-root Gram diagonal must be -2");
  if (!negative_definite(simple_gram)) throw NotFiniteTypeError("form is not negative definite; root system is infinite");

  // Breadth-first closure of the simple roots under the simple reflections;
  // finite because the form is definite.
  std::set<std::vector<Integer>> seen;
  std::deque<std::vector<Integer>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> e(n);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    const std::vector<Integer> v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Integer pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += v[j] * simple_gram(j, i);
      if (pairing == 0) continue;
      std::vector<Integer> w = v;
      w[i] += pairing;
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }

  std::vector<LatticeVector> positive;
  for (const auto& v : seen)
    if (std::all_of(v.begin(), v.end(), [](const Integer& c) { return c >= 0; })) positive.emplace_back(v);
  std::sort(positive.begin(), positive.end(), [](const LatticeVector& a, const LatticeVector& b) {
    const Integer ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return positive;
}

LatticeVector highest_root(const IntMatrix& simple_gram) {
  const auto roots = positive_roots(simple_gram);
  const LatticeVector& top = roots.back();
  for (const auto& r : roots)
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] > top[i]) throw ShapeError("no unique highest root (the simple-root diagram is disconnected)");
  return top;
}

}  // namespace milnor
