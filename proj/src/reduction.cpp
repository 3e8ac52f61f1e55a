#include "freegroup/reduction.hpp"

#include <stdexcept>

#include "freegroup/error.hpp"

namespace fg {

namespace {

std::string pair_text(const Word& w, std::size_t p) {
  if (w.size() < 2 || p > w.size() - 2) return {};
  return to_string(w[p]) + " " + to_string(w[p + 1]);
}

Word remove_pair(const Word& w, std::size_t p) {
  std::vector<SignedGenerator> items;
  items.reserve(w.size() - 2);
  items.insert(items.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
  items.insert(items.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
  return Word(std::move(items));
}

}  // namespace

Word apply_step(const Word& w, std::size_t p) {
  if (!is_redex_at(w, p))
    throw InvalidRedex(std::nullopt, p, pair_text(w, p),
                       "no redex at position " + std::to_string(p) + " of '" + to_string(w) + "'");
  return remove_pair(w, p);
}

ReductionSequence validate_sequence(const Word& w, std::span<const std::size_t> positions) {
  Word current = w;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    std::size_t p = positions[k];
    if (!is_redex_at(current, p)) {
      std::string found = pair_text(current, p);
      throw InvalidRedex(k, p, found,
                         "step " + std::to_string(k) + ": position " + std::to_string(p) +
                             (found.empty() ? " is out of range" : " holds '" + found + "'") +
                             ", not a redex");
    }
    current = remove_pair(current, p);
  }
  if (!current.empty())
    throw IncompleteReduction(to_string(current),
                              "reduction stops at '" + to_string(current) + "' after " +
                                  std::to_string(positions.size()) + " steps");
  return ReductionSequence(w, Steps(positions.begin(), positions.end()));
}

std::vector<Word> run_sequence(const ReductionSequence& r) {
  std::vector<Word> trace;
  trace.reserve(r.size() + 1);
  trace.push_back(r.word());
  for (std::size_t p : r.steps()) trace.push_back(remove_pair(trace.back(), p));
  return trace;
}

Word word_before_step(const ReductionSequence& r, std::size_t k) {
  if (k > r.size()) throw std::out_of_range("step index past end of sequence");
  Word current = r.word();
  for (std::size_t j = 0; j < k; ++j) current = remove_pair(current, r.steps()[j]);
  return current;
}

std::size_t step_of_index_from(const ReductionSequence& r, std::size_t from, std::size_t i) {
  if (from > r.size() || i >= r.word().size() - 2 * from)
    throw std::out_of_range("index outside the word");
  std::size_t at = i;
  for (std::size_t k = from; k < r.size(); ++k) {
    std::size_t q = r.steps()[k];
    if (at == q || at == q + 1) return k;
    if (at > q + 1) at -= 2;
  }
  // Unreachable for a complete reduction: every letter is removed.
  throw std::logic_error("letter survives a complete reduction");
}

std::size_t step_of_index(const ReductionSequence& r, std::size_t i) {
  return step_of_index_from(r, 0, i);
}

}  // namespace fg
