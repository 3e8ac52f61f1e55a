#pragma once

#include <random>
#include <string>

#include "freegroup/core.hpp"
#include "freegroup/reduction.hpp"
#include "freegroup/text.hpp"

namespace fgtest {

inline fg::Word W(const std::string& text) { return fg::parse_word(text); }

inline fg::SignedGenerator pos(const std::string& name) { return {fg::Generator(name), fg::Sign::positive}; }
inline fg::SignedGenerator neg(const std::string& name) { return {fg::Generator(name), fg::Sign::negative}; }

inline fg::ReductionSequence R(const std::string& word, const fg::Steps& steps) {
  return fg::validate_sequence(W(word), steps);
}

/// Random word over the first `letters` generators of a, b, c, ...
inline fg::Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t length) {
  std::uniform_int_distribution<std::size_t> pick(0, 2 * letters - 1);
  std::vector<fg::SignedGenerator> items;
  for (std::size_t i = 0; i < length; ++i) {
    std::size_t k = pick(rng);
    items.push_back({fg::Generator(std::string(1, static_cast<char>('a' + k / 2))),
                     k % 2 ? fg::Sign::negative : fg::Sign::positive});
  }
  return fg::Word(std::move(items));
}

}  // namespace fgtest
