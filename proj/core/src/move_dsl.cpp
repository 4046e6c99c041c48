#include "milnor/move_dsl.hpp"

#include "milnor/errors.hpp"

#include <array>
#include <optional>

namespace milnor {

namespace {

struct Keyword {
  std::string_view spelling;
  MoveKind kind;
};

// Longer spellings first so that "alpha" is not read as "a" + garbage.
constexpr std::array<Keyword, 9> kKeywords{{
    {"alpha", MoveKind::Alpha},
    {"beta", MoveKind::Beta},
    {"gamma", MoveKind::Gamma},
    {"\xCE\xB1", MoveKind::Alpha},  // α
    {"\xCE\xB2", MoveKind::Beta},   // β
    {"\xCE\xB3", MoveKind::Gamma},  // γ
    {"a", MoveKind::Alpha},
    {"b", MoveKind::Beta},
    {"g", MoveKind::Gamma},
}};

constexpr int kMaxDigits = 9;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MoveSeq run() {
    MoveSeq seq;
    skip_blank();
    if (at_end()) return seq;
    for (;;) {
      seq.moves.push_back(move());
      skip_blank();
      if (at_end()) break;
      const char c = text_[pos_];
      if (c == ',') {
        ++pos_;
      } else if (c == ';') {
        ++pos_;
        seq.group_marks.push_back(seq.moves.size());
      } else {
        throw ParseError("expected ',' or ';'", pos_);
      }
      skip_blank();
    }
    return seq;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_blank() {
    while (!at_end()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v')
        ++pos_;
      else
        break;
    }
  }

  Move move() {
    const std::size_t start = pos_;
    std::optional<MoveKind> kind;
    for (const auto& kw : kKeywords) {
      if (text_.substr(pos_, kw.spelling.size()) == kw.spelling) {
        kind = kw.kind;
        pos_ += kw.spelling.size();
        break;
      }
    }
    if (!kind) throw ParseError(at_end() ? "expected a move, found end of input" : "expected a move", start);
    skip_blank();
    const std::size_t digits_at = pos_;
    long long value = 0;
    int digits = 0;
    while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      if (++digits > kMaxDigits) throw ParseError("move index too large", digits_at);
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (digits == 0) throw ParseError("expected a move index", digits_at);
    const Move m{*kind, static_cast<int>(value)};
    if (m.index < min_index(m.kind)) {
      throw MoveRangeError(to_string(m) + " is out of range (index must be >= " + std::to_string(min_index(m.kind)) +
                               ") at byte " + std::to_string(start),
                           start);
    }
    return m;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MoveSeq parse_moves(std::string_view text) { return Parser(text).run(); }

std::string format_moves(const MoveSeq& s) {
  std::string out;
  std::size_t next_mark = 0;
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    if (i > 0) {
      bool group_break = false;
      while (next_mark < s.group_marks.size() && s.group_marks[next_mark] <= i) {
        if (s.group_marks[next_mark] == i) group_break = true;
        ++next_mark;
      }
      out += group_break ? "; " : ", ";
    }
    out += to_string(s.moves[i]);
  }
  return out;
}

}  // namespace milnor
