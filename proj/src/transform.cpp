#include "freegroup/transform.hpp"

#include <stdexcept>

#include "freegroup/error.hpp"
#include "sequence_access.hpp"

namespace fg {

namespace {

void push(ReductionSequence& seq, MoveChain& chain, Move m) {
  seq = apply_move(seq, m);
  chain.push_back(m);
}

// Rewrites seq so that step `level` removes the redex at p of the word left
// after `level` steps. Steps before `level` are never touched.
void front_reduce_from(ReductionSequence& seq, std::size_t level, std::size_t p, MoveChain& chain) {
  Word before = word_before_step(seq, level);
  if (!is_redex_at(before, p))
    throw InvalidRedex(std::nullopt, p, {},
                       "no redex at position " + std::to_string(p) + " of '" + to_string(before) +
                           "'");

  std::size_t m = step_of_index_from(seq, level, p);
  std::size_t n = step_of_index_from(seq, level, p + 1);

  std::size_t target = n;
  if (m > n) {
    // a' is removed with the a to its right: u a a' a v.
    push(seq, chain, {MoveKind::overlap_left, n});
  } else if (m < n) {
    // a is removed with the a' to its left: u a' a a' v.
    push(seq, chain, {MoveKind::overlap_right, m});
    target = m;
  }
  for (std::size_t j = target; j > level; --j) push(seq, chain, {MoveKind::swap, j - 1});

  if (seq.steps()[level] != p) throw std::logic_error("front reduction did not reach the marked redex");
}

}  // namespace

FrontReduction front_reduction(const ReductionSequence& r, std::size_t p) {
  ReductionSequence seq = r;
  MoveChain chain;
  front_reduce_from(seq, 0, p, chain);
  return {std::move(chain), std::move(seq)};
}

MoveChain transform_to(const ReductionSequence& r, const ReductionSequence& s) {
  if (r.word() != s.word())
    throw WordMismatch("sequences reduce different words: '" + to_string(r.word()) + "' and '" +
                       to_string(s.word()) + "'");
  ReductionSequence seq = r;
  MoveChain chain;
  for (std::size_t level = 0; level < s.size(); ++level)
    front_reduce_from(seq, level, s.steps()[level], chain);
  return chain;
}

ReductionSequence extend_reduction(const Word& y, const SignedGenerator& a, const Word& z,
                                   const ReductionSequence& r) {
  if (r.word() != concat(y, z))
    throw WordMismatch("sequence does not reduce '" + to_string(concat(y, z)) + "'");
  Word word = concat(concat(y, Word{a, invert(a)}), z);
  Steps steps;
  steps.reserve(r.size() + 1);
  steps.push_back(y.size());
  steps.insert(steps.end(), r.steps().begin(), r.steps().end());
  return SequenceAccess::trusted(std::move(word), std::move(steps));
}

ReductionSequence drop_redex(const ReductionSequence& r, std::size_t p) {
  FrontReduction front = front_reduction(r, p);
  const Steps& steps = front.sequence.steps();
  return SequenceAccess::trusted(apply_step(r.word(), p), Steps(steps.begin() + 1, steps.end()));
}

}  // namespace fg
