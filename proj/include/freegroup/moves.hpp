#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "freegroup/reduction.hpp"

namespace fg {

enum class MoveKind : unsigned char {
  swap,          ///< exchange steps i and i+1
  overlap_left,  ///< step i reduces at p - 1 instead of p
  overlap_right  ///< step i reduces at p + 1 instead of p
};

enum class Direction : unsigned char { left, right };

/// One elementary transformation of a reduction sequence.
struct Move {
  MoveKind kind = MoveKind::swap;
  std::size_t at = 0;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

using MoveChain = std::vector<Move>;

/// Exchanges two consecutive steps whose redexes are disjoint in the word
/// before step i.
///
/// With p = steps[i] and q = steps[i+1] the new steps are
///   (q, p - 2)     if q <= p - 2,
///   (q + 2, p)     if q >= p.
/// q == p - 1 means the second redex straddles the first (nested) and raises
/// NotIndependent.
ReductionSequence swap(const ReductionSequence& r, std::size_t i);

/// Moves step i by one position inside a configuration a a' a, where both
/// overlapping pairs remove to the same word. Throws NoOverlap if the word
/// before step i lacks that configuration.
ReductionSequence overlap_switch(const ReductionSequence& r, std::size_t i, Direction direction);

ReductionSequence apply_move(const ReductionSequence& r, const Move& m);

/// Left fold of apply_move. A failing move is rethrown with its chain index set.
ReductionSequence apply_chain(const ReductionSequence& r, const MoveChain& chain);

/// The move that undoes m when applied to apply_move(r, m).
Move inverse(const Move& m) noexcept;

/// Every move applicable to r, in the order swap, ovl, ovr for i = 0, 1, ...
std::vector<std::pair<Move, ReductionSequence>> applicable_moves(const ReductionSequence& r);

/// "swap@i", "ovl@i", "ovr@i".
std::string to_string(const Move& m);
/// Comma-separated move texts, "" for the empty chain.
std::string to_string(const MoveChain& chain);

Move parse_move(std::string_view text);
MoveChain parse_chain(std::string_view text);

}  // namespace fg
