#include "milnor/errors.hpp"
#include "milnor/move_dsl.hpp"
#include "milnor/verify.hpp"

#include "properties.hpp"

#include <gtest/gtest.h>

#include <random>

namespace milnor {
namespace {

TEST(ParseMoves, GroupedWord) {
  const MoveSeq s = parse_moves("b4, b3, b2; g1");
  EXPECT_EQ(s.moves, (std::vector<Move>{Move::beta(4), Move::beta(3), Move::beta(2), Move::gamma(1)}));
  EXPECT_EQ(s.group_marks, (std::vector<std::size_t>{3}));
}

TEST(ParseMoves, GreekAndLongSpellings) {
  const MoveSeq s = parse_moves("β6; β6, β5, β4, β3, β2; β6, β5, β4, β3, β2; γ1, γ3");
  EXPECT_EQ(s.size(), 13u);
  EXPECT_EQ(s.moves.front(), Move::beta(6));
  EXPECT_EQ(s.moves.back(), Move::gamma(3));
  EXPECT_EQ(s.group_marks, (std::vector<std::size_t>{1, 6, 11}));
  EXPECT_EQ(parse_moves("alpha 3 ,beta12;gamma 1").moves,
            (std::vector<Move>{Move::alpha(3), Move::beta(12), Move::gamma(1)}));
  EXPECT_EQ(parse_moves("α1").moves, (std::vector<Move>{Move::alpha(1)}));
}

TEST(ParseMoves, SameWordAsTheGeneratedOne) {
  EXPECT_EQ(parse_moves("β6; β6, β5, β4, β3, β2; β6, β5, β4, β3, β2; γ1, γ3").moves, abb15_to_s_word().moves);
}

TEST(ParseMoves, EmptyInput) {
  EXPECT_TRUE(parse_moves("").empty());
  EXPECT_TRUE(parse_moves("  \t\n").empty());
}

TEST(ParseMoves, StaticLowerBounds) {
  EXPECT_THROW(parse_moves("b1"), MoveRangeError);
  EXPECT_THROW(parse_moves("a0"), MoveRangeError);
  EXPECT_THROW(parse_moves("g0"), MoveRangeError);
  EXPECT_NO_THROW(parse_moves("a999"));  // upper bounds are checked on application
}

TEST(ParseMoves, SyntaxErrorsCarryByteOffsets) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  for (const Case& c : {Case{"x1", 0}, Case{"b2,", 3}, Case{"b2;;b3", 3}, Case{"b", 1}, Case{"b2 b3", 3},
                        Case{"b-2", 1}, Case{"b2,,", 3}}) {
    try {
      parse_moves(c.text);
      FAIL() << "no error for '" << c.text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.offset(), c.offset) << c.text;
    }
  }
}

TEST(ParseMoves, RejectsOverlongNumbers) { EXPECT_THROW(parse_moves("b12345678901234"), ParseError); }

TEST(FormatMoves, Examples) {
  EXPECT_EQ(format_moves(MoveSeq{}), "");
  EXPECT_EQ(format_moves(MoveSeq{{Move::alpha(3)}, {}}), "a3");
  EXPECT_EQ(format_moves(parse_moves("β4,β3 ;γ1")), "b4, b3; g1");
}

TEST(FormatMoves, RoundTripOnGeneratedAndFixtureWords) {
  std::vector<MoveSeq> words{gabrielov_to_t_word(3, 3, 3), gabrielov_to_t_word(7, 3, 2), abb15_to_s_word()};
  for (auto r : {PermutationReading::AsWritten, PermutationReading::GroupsReversedInside}) words.push_back(permutation_word(r));
  for (TsCase c : kTsCases)
    for (const auto& stage : ts_fixture(c).stages) words.push_back(stage.word);
  for (const MoveSeq& w : words) {
    const std::string text = format_moves(w);
    EXPECT_EQ(parse_moves(text), w) << text;
    EXPECT_EQ(format_moves(parse_moves(text)), text);
  }
}

TEST(FormatMoves, RoundTripOnRandomWordsWithGroups) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 500; ++t) {
    MoveSeq s;
    const int n = static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) {
      const auto kind = static_cast<MoveKind>(rng() % 3);
      s.moves.push_back(Move{kind, min_index(kind) + static_cast<int>(rng() % 30)});
      if (i + 1 < n && rng() % 4 == 0) s.group_marks.push_back(static_cast<std::size_t>(i + 1));
    }
    EXPECT_EQ(parse_moves(format_moves(s)), s) << format_moves(s);
  }
}

TEST(ParseMoves, FuzzArbitraryBytesNeverCrash) {
  std::mt19937_64 rng(99);
  const std::string alphabet = "abgeltmpha0123456789 ,;\t\n-+x\xce\xb1\xb2\xb3\xff";
  for (int t = 0; t < 20000; ++t) {
    std::string text;
    const std::size_t n = rng() % 24;
    for (std::size_t i = 0; i < n; ++i)
      text += (rng() % 8 == 0) ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    try {
      const MoveSeq s = parse_moves(text);
      EXPECT_EQ(parse_moves(format_moves(s)), s);
    } catch (const ParseError& e) {
      EXPECT_LE(e.offset(), text.size());
    } catch (const MoveRangeError&) {
    }
  }
}

}  // namespace
}  // namespace milnor
