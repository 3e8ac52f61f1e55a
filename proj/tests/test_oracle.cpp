#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "freegroup/error.hpp"
#include "freegroup/group.hpp"
#include "freegroup/oracle.hpp"
#include "naive.hpp"
#include "support.hpp"

using namespace fg;
using namespace fgtest;

namespace {

std::vector<Steps> steps_of(const std::vector<ReductionSequence>& all) {
  std::vector<Steps> out;
  for (const auto& r : all) out.push_back(r.steps());
  return out;
}

std::set<std::pair<std::string, std::string>> edge_set(const MoveGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : g.edges())
    out.emplace(format_positions(g.nodes()[e.from]), format_positions(g.nodes()[e.to]));
  return out;
}

}  // namespace

TEST(EnumerateSequences, Examples) {
  EXPECT_EQ(steps_of(enumerate_sequences(W("a a'"))), (std::vector<Steps>{{0}}));
  EXPECT_EQ(steps_of(enumerate_sequences(W("a a' a a'"))), (std::vector<Steps>{{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_TRUE(enumerate_sequences(W("a b")).empty());
  EXPECT_TRUE(enumerate_sequences(W("a a' b")).empty());
  EXPECT_EQ(steps_of(enumerate_sequences(W(""))), (std::vector<Steps>{{}}));
}

TEST(EnumerateSequences, MatchesBruteForce) {
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto& s : naive::strings("aAbB", n))
      EXPECT_EQ(steps_of(enumerate_sequences(naive::to_word(s))), naive::sequences(s)) << s;
  for (const char* s : {"aAaAaAaAaA", "abcCBAaAbB", "aAbBcCaAbB"})
    EXPECT_EQ(steps_of(enumerate_sequences(naive::to_word(s))), naive::sequences(s)) << s;
}

TEST(EnumerateSequences, CapIsConfigurable) {
  Word w = W("a a' a a' a a' a a' a a' a a' a a'");
  EXPECT_THROW(enumerate_sequences(w), CapExceeded);
  EXPECT_THROW(enumerate_sequences(W("a a' a a'"), {2}), CapExceeded);
  EXPECT_EQ(enumerate_sequences(W("a a' a a'"), {4}).size(), 3u);
  // Alternating words: 1 * 3 * 5 * ... choices.
  EXPECT_EQ(enumerate_sequences(W("a a' a a' a a' a a' a a' a a'")).size(), 11u * 9 * 7 * 5 * 3);
}

TEST(MoveGraph, Examples) {
  auto g1 = build_move_graph(W("a a' b b'"));
  EXPECT_EQ(g1.nodes(), (std::vector<Steps>{{0, 0}, {2, 0}}));
  ASSERT_EQ(g1.edges().size(), 1u);
  EXPECT_EQ(g1.edges()[0].move, (Move{MoveKind::swap, 0}));

  auto g2 = build_move_graph(W("a a' a a'"));
  EXPECT_EQ(g2.nodes().size(), 3u);
  EXPECT_EQ(edge_set(g2), (std::set<std::pair<std::string, std::string>>{
                              {"0,0", "1,0"}, {"1,0", "2,0"}, {"0,0", "2,0"}}));

  auto g3 = build_move_graph(W("a a'"));
  EXPECT_EQ(g3.nodes().size(), 1u);
  EXPECT_TRUE(g3.arcs().empty());
}

TEST(MoveGraph, EdgesAreSymmetricAndMatchReference) {
  for (std::size_t n = 0; n <= 8; n += 2)
    for (const auto& s : naive::strings("aAbB", n)) {
      auto g = build_move_graph(naive::to_word(s));
      std::set<std::tuple<std::size_t, std::size_t, Move>> arcs;
      for (const auto& a : g.arcs()) arcs.emplace(a.from, a.to, a.move);
      for (const auto& a : g.arcs()) {
        EXPECT_TRUE(arcs.count({a.to, a.from, inverse(a.move)})) << s;
        EXPECT_TRUE(naive::adjacent(s, g.nodes()[a.from], g.nodes()[a.to])) << s;
      }
      std::size_t expected_edges = 0;
      for (std::size_t i = 0; i < g.nodes().size(); ++i)
        for (std::size_t j = i + 1; j < g.nodes().size(); ++j)
          expected_edges += naive::adjacent(s, g.nodes()[i], g.nodes()[j]);
      EXPECT_EQ(g.edges().size(), expected_edges) << s;
    }
}

TEST(CheckConnected, Examples) {
  EXPECT_TRUE(check_connected(build_move_graph(W("a a' b b'"))));
  EXPECT_TRUE(check_connected(build_move_graph(W("a a' a a'"))));
  EXPECT_TRUE(check_connected(build_move_graph(W("a b"))));
  auto d = bfs_distances(build_move_graph(W("a a' a a'")), 0);
  EXPECT_EQ(d, (std::vector<std::size_t>{0, 1, 1}));
}

TEST(CheckTransformChain, Examples) {
  auto small = check_transform_chain(W("a a' b b'"));
  EXPECT_TRUE(small.ok());
  EXPECT_EQ(small.pairs_verified, 4u);
  EXPECT_EQ(small.max_bfs_distance, 1u);
  EXPECT_GE(small.max_chain_length, small.max_bfs_distance);

  auto single = check_transform_chain(W("a a'"));
  EXPECT_TRUE(single.ok());
  EXPECT_EQ(single.pairs_verified, 1u);
  EXPECT_EQ(single.max_chain_length, 0u);

  auto sample = check_transform_chain(W("a a' b c c' b'"));
  EXPECT_TRUE(sample.ok());
  const std::size_t nodes = naive::sequences("aAbcCB").size();
  EXPECT_EQ(sample.sequences_enumerated, nodes);
  EXPECT_EQ(sample.pairs_verified, nodes * nodes);
}

TEST(CheckTransformChain, SamplesPairsAboveLimit) {
  CheckConfig config;
  config.exhaustive_pair_limit = 5;
  config.sampled_pairs = 7;
  auto report = check_word(W("a a' a a' a a'"), config);
  EXPECT_EQ(report.sequences_enumerated, 15u);
  EXPECT_EQ(report.pairs_verified, 7u);
  EXPECT_TRUE(report.ok());
}

TEST(CheckTransformChain, IrreducibleWordsOnlyCheckTheLaws) {
  auto report = check_word(W("a b"), {});
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.reducible_words, 0u);
  EXPECT_EQ(report.pairs_verified, 0u);
  EXPECT_TRUE(check_word(W("a a' b"), {}).ok());
}

TEST(CheckTrivialityWitness, Examples) {
  EXPECT_TRUE(check_triviality_witness(W("a a' b c c' b'")));
  EXPECT_TRUE(check_triviality_witness(W("a a' b")));
  EXPECT_TRUE(check_triviality_witness(W("a a' a a' a a'")));
  EXPECT_THROW(check_triviality_witness(W("a a' a a' a a' a a' a a' a a' a a'")), CapExceeded);
}

TEST(CheckWords, DeterministicAcrossThreadCounts) {
  std::vector<Word> words;
  for (std::size_t n = 0; n <= 6; ++n)
    for (auto& w : all_words({Generator("a"), Generator("b")}, n)) words.push_back(w);
  std::reverse(words.begin(), words.end());
  CheckConfig one, four;
  four.jobs = 4;
  auto a = check_words(words, one), b = check_words(words, four);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.words_checked, b.words_checked);
  EXPECT_EQ(a.sequences_enumerated, b.sequences_enumerated);
  EXPECT_EQ(a.pairs_verified, b.pairs_verified);
  EXPECT_EQ(a.max_chain_length, b.max_chain_length);
  EXPECT_EQ(a.max_bfs_distance, b.max_bfs_distance);
  EXPECT_EQ(a.words_checked, 1u + 4 + 16 + 64 + 256 + 1024 + 4096);
}

TEST(Corpus, Generators) {
  const std::vector<Generator> ab{Generator("a"), Generator("b")};
  EXPECT_EQ(all_words(ab, 0).size(), 1u);
  EXPECT_EQ(all_words(ab, 3).size(), 64u);
  std::mt19937_64 rng(0);
  for (int k = 0; k < 100; ++k) {
    Word w = random_reducible_word(ab, static_cast<std::size_t>(k % 7), rng);
    EXPECT_EQ(w.size(), 2u * static_cast<std::size_t>(k % 7));
    EXPECT_TRUE(normal_form(w).empty());
    auto r = random_sequence(w, rng);
    EXPECT_EQ(r.word(), w);
  }
  EXPECT_THROW(random_sequence(W("a b"), rng), IncompleteReduction);
}

TEST(Dot, Format) {
  std::string dot = to_dot(build_move_graph(W("a a' b b'")));
  EXPECT_EQ(dot,
            "graph moves {\n"
            "  label=\"a a' b b'\";\n"
            "  n0 [label=\"0,0\"];\n"
            "  n1 [label=\"2,0\"];\n"
            "  n0 -- n1 [label=\"swap@0\"];\n"
            "}\n");
}
