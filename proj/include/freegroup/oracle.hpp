#pragma once

// Brute-force verification at small word lengths: enumerate every reduction
// sequence of a word, connect them by single moves, and cross-check the
// constructive algorithms of transform.hpp against the resulting graph.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "freegroup/core.hpp"
#include "freegroup/moves.hpp"
#include "freegroup/reduction.hpp"

namespace fg {

struct OracleConfig {
  std::size_t max_length = 12;
};

/// All reduction sequences of w, each once, in lexicographic order of their
/// steps. Throws CapExceeded if w is longer than config.max_length.
std::vector<ReductionSequence> enumerate_sequences(const Word& w, const OracleConfig& config = {});

/// Nodes are the reduction sequences of a word; there is one arc per
/// applicable move, so every edge appears in both directions.
class MoveGraph {
 public:
  struct Arc {
    std::size_t from;
    std::size_t to;
    Move move;
  };

  const Word& word() const noexcept { return word_; }
  const std::vector<Steps>& nodes() const noexcept { return nodes_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  /// Indices into arcs() leaving node i.
  const std::vector<std::size_t>& out_arcs(std::size_t i) const { return out_[i]; }
  std::optional<std::size_t> index_of(const Steps& steps) const;

  /// One arc per unordered pair of adjacent nodes, taken from the lower node.
  std::vector<Arc> edges() const;

 private:
  friend MoveGraph build_move_graph(const Word&, const OracleConfig&);

  Word word_;
  std::vector<Steps> nodes_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::map<Steps, std::size_t> index_;
};

MoveGraph build_move_graph(const Word& w, const OracleConfig& config = {});

/// At most one connected component. Vacuously true for the empty graph.
bool check_connected(const MoveGraph& g);

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

/// Move distance from source to every node; `unreachable` where there is none.
std::vector<std::size_t> bfs_distances(const MoveGraph& g, std::size_t source);

/// Graphviz text. Nodes are labelled by their steps, edges by the move.
std::string to_dot(const MoveGraph& g);

/// True iff w has no reduction sequence or all of them are connected by moves.
bool check_triviality_witness(const Word& w, const OracleConfig& config = {});

// ---------------------------------------------------------------------------
// Cross-checking

struct Counterexample {
  std::string word;
  std::string kind;  ///< "step-count", "red-nf", "disconnected", "transform", "front", "move"
  Steps r;
  Steps s;
  std::optional<std::size_t> failing_move;
  std::string detail;
};

struct CheckConfig {
  OracleConfig oracle;
  /// transform_to is checked on every ordered pair when the graph has at most
  /// this many nodes, otherwise on `sampled_pairs` random pairs.
  std::size_t exhaustive_pair_limit = std::numeric_limits<std::size_t>::max();
  std::size_t sampled_pairs = 50;
  std::uint64_t seed = 0;
  /// Also run front_reduction on every (sequence, redex) pair and check every
  /// move of the graph against its inverse.
  bool check_front = true;
  bool check_move_algebra = true;
  unsigned jobs = 1;
};

struct CheckReport {
  std::size_t words_checked = 0;
  std::size_t reducible_words = 0;
  std::size_t sequences_enumerated = 0;
  std::size_t pairs_verified = 0;
  std::size_t front_reductions_verified = 0;
  std::size_t moves_verified = 0;
  std::size_t max_chain_length = 0;
  std::size_t max_bfs_distance = 0;
  std::vector<Counterexample> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }
};

/// Verifies one word: step-count law, reducibility against the normal form,
/// connectivity, transform_to replay and length bound, and optionally
/// front_reduction and move inverses.
CheckReport check_word(const Word& w, const CheckConfig& config);

/// Runs check_word over every word, possibly on several threads, and merges
/// the per-word reports in order of word text.
CheckReport check_words(const std::vector<Word>& words, const CheckConfig& config);

/// Alias kept for the single-word cross-check.
inline CheckReport check_transform_chain(const Word& w, const CheckConfig& config = {}) {
  return check_word(w, config);
}

// ---------------------------------------------------------------------------
// Word corpora

std::vector<SignedGenerator> signed_alphabet(const std::vector<Generator>& alphabet);

/// Every word of exactly `length` letters over the doubled alphabet.
std::vector<Word> all_words(const std::vector<Generator>& alphabet, std::size_t length);

/// A word of 2 * half_length letters with empty normal form, built by
/// inserting random pairs a a' at random positions.
Word random_reducible_word(const std::vector<Generator>& alphabet, std::size_t half_length,
                           std::mt19937_64& rng);

/// A uniformly chosen step at every stage; requires a reducible word.
ReductionSequence random_sequence(const Word& w, std::mt19937_64& rng);

}  // namespace fg
