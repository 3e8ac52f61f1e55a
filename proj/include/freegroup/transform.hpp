#pragma once

#include <cstddef>

#include "freegroup/core.hpp"
#include "freegroup/moves.hpp"
#include "freegroup/reduction.hpp"

namespace fg {

struct FrontReduction {
  MoveChain chain;
  ReductionSequence sequence;  ///< apply_chain(input, chain); first step is the marked redex
};

/// Transforms r into a sequence whose first step removes the redex at
/// position p of r.word().
///
/// With m and n the steps removing the letters at p and p + 1:
///   m == n  the step is bubbled to the front by swaps at n-1, ..., 0;
///   m > n   an ovl at step n makes it remove the marked pair, then bubble;
///   m < n   an ovr at step m, then bubble.
/// Throws InvalidRedex if p is not a redex of r.word().
FrontReduction front_reduction(const ReductionSequence& r, std::size_t p);

/// A chain taking r to s, built by front-reducing r to the first step of s
/// and continuing on the tails. Throws WordMismatch if the words differ.
MoveChain transform_to(const ReductionSequence& r, const ReductionSequence& s);

/// Reduction of y a a' z that removes the inserted pair first and then
/// follows r. Throws WordMismatch if r is not over y z.
ReductionSequence extend_reduction(const Word& y, const SignedGenerator& a, const Word& z,
                                   const ReductionSequence& r);

/// Reduction of the word with the redex at p removed, obtained by
/// front-reducing to p and dropping the first step.
ReductionSequence drop_redex(const ReductionSequence& r, std::size_t p);

/// Upper bound on transform_to chain length for sequences of k steps:
/// k(k+1)/2 + k.
constexpr std::size_t transform_chain_bound(std::size_t k) noexcept { return k * (k + 1) / 2 + k; }

}  // namespace fg
