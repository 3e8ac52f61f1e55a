#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "freegroup/core.hpp"

namespace fg {

/// Positions of successive reduction steps. Each position is relative to the
/// word produced by all earlier steps.
using Steps = std::vector<std::size_t>;

/// A complete reduction of a word to the empty word.
///
/// Instances can only be obtained through validate_sequence() or the
/// operations of this library, so every value satisfies:
///   - each step is a redex in the word left by the previous steps;
///   - the last step leaves the empty word;
///   - steps().size() == word().size() / 2.
/// Two sequences over the same word are equal iff their steps are equal.
class ReductionSequence {
 public:
  const Word& word() const noexcept { return word_; }
  const Steps& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }

  friend bool operator==(const ReductionSequence&, const ReductionSequence&) = default;

 private:
  ReductionSequence(Word word, Steps steps) : word_(std::move(word)), steps_(std::move(steps)) {}

  // Bypasses validation; callers must have established the invariants.
  static ReductionSequence trusted(Word word, Steps steps) {
    return ReductionSequence(std::move(word), std::move(steps));
  }

  friend ReductionSequence validate_sequence(const Word&, std::span<const std::size_t>);
  friend struct SequenceAccess;

  Word word_;
  Steps steps_;
};

/// Removes the redex at p. Throws InvalidRedex if p is not a redex of w.
Word apply_step(const Word& w, std::size_t p);

/// Checks that executing positions from w is a complete reduction.
/// Throws InvalidRedex (with the step index) or IncompleteReduction.
ReductionSequence validate_sequence(const Word& w, std::span<const std::size_t> positions);

/// The intermediate words: r.word(), ..., empty. Has r.size() + 1 entries.
std::vector<Word> run_sequence(const ReductionSequence& r);

/// The word left after the first k steps of r.
Word word_before_step(const ReductionSequence& r, std::size_t k);

/// The step at which the letter originally at index i is removed.
/// Requires i < r.word().size().
std::size_t step_of_index(const ReductionSequence& r, std::size_t i);

/// Same as step_of_index, but tracks index i of the word left after the
/// first `from` steps.
std::size_t step_of_index_from(const ReductionSequence& r, std::size_t from, std::size_t i);

}  // namespace fg
