#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "freegroup/core.hpp"

namespace fg {

/// A redex-free word: the canonical representative of a free group element.
class NormalWord {
 public:
  NormalWord() = default;

  const Word& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }

  friend bool operator==(const NormalWord&, const NormalWord&) = default;
  friend auto operator<=>(const NormalWord&, const NormalWord&) = default;

 private:
  explicit NormalWord(Word w) : word_(std::move(w)) {}

  friend NormalWord normal_form(const Word&);
  friend NormalWord inv(const NormalWord&);

  Word word_;
};

/// Stack reduction: each letter either cancels the top of the stack or is
/// pushed. Linear time.
NormalWord normal_form(const Word& w);

/// A normal form together with the positions of the cancellations the stack
/// algorithm performed, as a list of reduction steps on w.
struct Normalization {
  NormalWord normal;
  std::vector<std::size_t> steps;
};
Normalization normalize_with_witness(const Word& w);

NormalWord mul(const NormalWord& u, const NormalWord& v);

/// Reverses and flips signs; the result is already reduced.
NormalWord inv(const NormalWord& u);

/// Decides equality of the group elements represented by u and v.
bool eq(const Word& u, const Word& v);

/// Prepends c without normalizing.
Word cons(const SignedGenerator& c, const Word& w);

/// Exponent sum per generator. Generators with sum zero are omitted.
std::map<Generator, std::int64_t> abelianize(const Word& w);

}  // namespace fg
