#include <gtest/gtest.h>

#include <random>

#include "freegroup/core.hpp"
#include "freegroup/error.hpp"
#include "freegroup/text.hpp"
#include "naive.hpp"
#include "support.hpp"

using namespace fg;
using namespace fgtest;

TEST(Generator, AcceptsIdentifiersOnly) {
  EXPECT_EQ(Generator("x_1").name(), "x_1");
  EXPECT_NO_THROW(Generator("_"));
  EXPECT_THROW(Generator(""), ParseError);
  EXPECT_THROW(Generator("1a"), ParseError);
  EXPECT_THROW(Generator("a-b"), ParseError);
  EXPECT_EQ(Generator("ab"), Generator("ab"));
  EXPECT_NE(Generator("ab"), Generator("a"));
}

TEST(Invert, FlipsSign) {
  EXPECT_EQ(invert(pos("a")), neg("a"));
  EXPECT_EQ(invert(neg("c")), pos("c"));
  EXPECT_EQ(invert(invert(neg("b"))), neg("b"));
}

TEST(Concat, Examples) {
  EXPECT_EQ(concat(W("a b"), W("c d")), W("a b c d"));
  EXPECT_EQ(concat(W(""), W("a")), W("a"));
  EXPECT_EQ(concat(W("a"), W("")), W("a"));
  EXPECT_EQ(concat(W("a b"), W("c d")).size(), 4u);
}

TEST(Concat, AssociativeWithUnit) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    Word x = random_word(rng, 3, len(rng)), y = random_word(rng, 3, len(rng)), z = random_word(rng, 3, len(rng));
    EXPECT_EQ(concat(x, concat(y, z)), concat(concat(x, y), z));
    EXPECT_EQ(concat(x, Word{}), x);
    EXPECT_EQ(concat(Word{}, x), x);
  }
}

TEST(IsRedexAt, Examples) {
  Word w = W("a a' b");
  EXPECT_TRUE(is_redex_at(w, 0));
  EXPECT_FALSE(is_redex_at(w, 1));
  EXPECT_FALSE(is_redex_at(w, 2));
  EXPECT_FALSE(is_redex_at(w, 99));
  EXPECT_FALSE(is_redex_at(Word{}, 0));

  Word alt = W("a a' a a'");
  for (std::size_t p : {0u, 1u, 2u}) EXPECT_TRUE(is_redex_at(alt, p)) << p;
  EXPECT_FALSE(is_redex_at(W("a a"), 0));
  EXPECT_FALSE(is_redex_at(W("a b'"), 0));
}

TEST(IsRedexAt, MatchesGeneratorAndSignCharacterisation) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& s : naive::strings("aAbB", n)) {
      Word w = naive::to_word(s);
      for (std::size_t p = 0; p < n + 2; ++p) {
        bool expected = p + 1 < w.size() && w[p].gen == w[p + 1].gen && w[p].sign != w[p + 1].sign;
        EXPECT_EQ(is_redex_at(w, p), expected) << s << " @" << p;
        EXPECT_EQ(is_redex_at(w, p), naive::redex(s, p));
      }
    }
}

TEST(FindRedexes, Examples) {
  EXPECT_EQ(find_redexes(W("a a' b c c' b'")), (std::vector<std::size_t>{0, 3}));
  EXPECT_TRUE(find_redexes(W("")).empty());
  EXPECT_EQ(find_redexes(W("a a' a a'")), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ParseWord, Examples) {
  EXPECT_EQ(parse_word("a a' b c c' b'"),
            (Word{pos("a"), neg("a"), pos("b"), pos("c"), neg("c"), neg("b")}));
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_TRUE(parse_word("  \t ").empty());
  EXPECT_EQ(parse_word("  x_1'   Y  "), (Word{neg("x_1"), pos("Y")}));
}

TEST(ParseWord, ReportsOffsetAndToken) {
  try {
    parse_word("a''");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 0u);
    EXPECT_EQ(e.token(), "a''");
  }
  try {
    parse_word("a b 9c");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.token(), "9c");
  }
  EXPECT_THROW(parse_word("'"), ParseError);
  EXPECT_THROW(parse_word("a'b"), ParseError);
  EXPECT_THROW(parse_word("a^-1"), ParseError);
}

TEST(ParseWord, RenderRoundTripNormalizesWhitespaceOnly) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 3, trial % 9);
    std::string text = to_string(w);
    EXPECT_EQ(parse_word(text), w);
    EXPECT_EQ(to_string(parse_word("  " + text + "\n")), text);
  }
  EXPECT_EQ(display(Word{}), "nil");
  EXPECT_EQ(to_string(Word{}), "");
}

TEST(ParsePositions, Forms) {
  EXPECT_EQ(parse_positions("3,0,0"), (std::vector<std::size_t>{3, 0, 0}));
  EXPECT_EQ(parse_positions("3 0 0"), (std::vector<std::size_t>{3, 0, 0}));
  EXPECT_EQ(parse_positions(" 3, 0 ,0 "), (std::vector<std::size_t>{3, 0, 0}));
  EXPECT_TRUE(parse_positions("").empty());
  EXPECT_THROW(parse_positions("3,,0"), ParseError);
  EXPECT_THROW(parse_positions("3,"), ParseError);
  EXPECT_THROW(parse_positions(",3"), ParseError);
  EXPECT_THROW(parse_positions("-1"), ParseError);
  EXPECT_THROW(parse_positions("1x"), ParseError);
  EXPECT_EQ(format_positions(std::vector<std::size_t>{3, 0, 0}), "3,0,0");
}
