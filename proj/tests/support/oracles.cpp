#include "oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <functional>
#include <stdexcept>

namespace milnor::oracle {

using Rational = boost::multiprecision::cpp_rational;

namespace {

std::vector<std::vector<Rational>> to_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  return a;
}

}  // namespace

std::size_t rational_rank(const IntMatrix& m) {
  auto a = to_rational(m);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < m.cols(); ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

Integer rational_determinant(const IntMatrix& m) {
  auto a = to_rational(m);
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return boost::multiprecision::numerator(det);
}

std::vector<std::vector<long long>> enumerate_positive_roots(const IntMatrix& gram, int max_coeff) {
  const std::size_t n = gram.rows();
  std::vector<std::vector<long long>> g(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = gram(i, j).convert_to<long long>();
  std::vector<std::vector<long long>> out;
  std::vector<long long> v(n, 0);
  // Odometer over [0, max_coeff]^n.
  while (true) {
    bool nonzero = false;
    long long q = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      nonzero = true;
      for (std::size_t j = 0; j < n; ++j) q += v[i] * g[i][j] * v[j];
    }
    if (nonzero && q == -2) out.push_back(v);
    std::size_t k = 0;
    while (k < n && v[k] == max_coeff) v[k++] = 0;
    if (k == n) break;
    ++v[k];
  }
  return out;
}

int matrix_order(const IntMatrix& m, int limit) {
  const IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix power = m;
  for (int n = 1; n <= limit; ++n) {
    if (power == id) return n;
    power = power * m;
  }
  return 0;
}

std::vector<std::vector<long long>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).convert_to<long long>();
  return out;
}

std::vector<std::vector<long long>> apply_move_by_definition(const std::vector<std::vector<long long>>& rows,
                                                             const std::vector<std::vector<long long>>& gram,
                                                             Move m) {
  auto form = [&gram](const std::vector<long long>& x, const std::vector<long long>& y) {
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * gram[i][j] * y[j];
    return s;
  };
  auto reflect_in = [&form](const std::vector<long long>& d, const std::vector<long long>& x) {
    const long long c = form(x, d);
    std::vector<long long> out = x;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += c * d[i];
    return out;
  };
  auto out = rows;
  const auto i = static_cast<std::size_t>(m.index - 1);
  switch (m.kind) {
    case MoveKind::Alpha:
      out[i] = reflect_in(rows[i], rows[i + 1]);
      out[i + 1] = rows[i];
      break;
    case MoveKind::Beta:
      out[i - 1] = rows[i];
      out[i] = reflect_in(rows[i], rows[i - 1]);
      break;
    case MoveKind::Gamma:
      for (auto& x : out[i]) x = -x;
      break;
  }
  return out;
}

std::optional<std::vector<Move>> exhaustive_shortest_word(const Basis& start,
                                                          const std::function<bool(const Basis&)>& accept,
                                                          const std::vector<Move>& moves, int max_depth) {
  for (int len = 0; len <= max_depth; ++len) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<Move> word;
      for (std::size_t d : digits) word.push_back(moves[d]);
      if (accept(apply_sequence(start, word))) return word;
      // Lexicographic successor: the last digit varies fastest.
      int k = len - 1;
      while (k >= 0 && digits[static_cast<std::size_t>(k)] + 1 == moves.size()) digits[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
      ++digits[static_cast<std::size_t>(k)];
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

class DotParser {
 public:
  explicit DotParser(const std::string& text) : s_(text) {}

  DotGraph parse() {
    DotGraph g;
    std::string kw = keyword();
    if (kw == "strict") kw = keyword();
    if (kw != "graph") fail("expected 'graph'");
    skip_ws();
    if (peek() != '{') g.name = id();
    expect('{');
    while (true) {
      skip_ws();
      if (peek() == '}') break;
      if (at_end()) fail("unterminated graph body");
      statement(g);
    }
    expect('}');
    skip_ws();
    if (!at_end()) fail("trailing characters after graph");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("DOT: " + what + " at byte " + std::to_string(pos_));
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_.compare(pos_, 2, "//") == 0) {
        while (!at_end() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string keyword() {
    skip_ws();
    std::string out;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
    return out;
  }
  std::string id() {
    skip_ws();
    if (peek() == '"') {
      ++pos_;
      std::string out;
      while (!at_end() && s_[pos_] != '"') {
        if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
        out += s_[pos_++];
      }
      if (at_end()) fail("unterminated string");
      ++pos_;
      return out;
    }
    std::string out;
    const unsigned char c0 = static_cast<unsigned char>(peek());
    if (std::isalpha(c0) || c0 == '_') {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) out += s_[pos_++];
    } else if (std::isdigit(c0) || c0 == '-' || c0 == '.') {
      if (c0 == '-') out += s_[pos_++];
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) out += s_[pos_++];
      if (out.empty() || out == "-") fail("bad numeral");
    } else {
      fail("expected an identifier");
    }
    return out;
  }
  std::vector<std::pair<std::string, std::string>> attr_list() {
    std::vector<std::pair<std::string, std::string>> out;
    expect('[');
    while (true) {
      skip_ws();
      if (peek() == ']') break;
      std::string key = id();
      expect('=');
      out.emplace_back(std::move(key), id());
      skip_ws();
      if (peek() == ',' || peek() == ';') ++pos_;
    }
    expect(']');
    return out;
  }
  void statement(DotGraph& g) {
    const std::size_t save = pos_;
    const std::string kw = keyword();
    skip_ws();
    if ((kw == "graph" || kw == "node" || kw == "edge") && peek() == '[') {
      attr_list();
    } else {
      pos_ = save;
      const std::string first = id();
      skip_ws();
      if (peek() == '=') {
        ++pos_;
        id();
      } else if (s_.compare(pos_, 2, "--") == 0) {
        std::vector<std::string> chain{first};
        while (true) {
          skip_ws();
          if (s_.compare(pos_, 2, "--") != 0) break;
          pos_ += 2;
          chain.push_back(id());
        }
        bool dashed = false;
        skip_ws();
        if (peek() == '[')
          for (const auto& [k, v] : attr_list())
            if (k == "style" && v == "dashed") dashed = true;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) g.edges.push_back({chain[i], chain[i + 1], dashed});
      } else {
        if (s_.compare(pos_, 2, "->") == 0) fail("directed edge in an undirected graph");
        if (peek() == '[') attr_list();
        g.nodes.push_back(first);
      }
    }
    skip_ws();
    if (peek() == ';') ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

DotGraph parse_dot(const std::string& text) { return DotParser(text).parse(); }

}  // namespace milnor::oracle
