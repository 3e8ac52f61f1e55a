#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fg {

/// A generator name. Names follow the identifier pattern [A-Za-z_][A-Za-z0-9_]*
/// and compare as strings.
class Generator {
 public:
  /// Throws ParseError if name is not an identifier.
  explicit Generator(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;

  static bool is_identifier(std::string_view text) noexcept;

 private:
  std::string name_;
};

enum class Sign : unsigned char { positive, negative };

/// An element of the doubled alphabet: a generator or its formal inverse.
struct SignedGenerator {
  Generator gen;
  Sign sign = Sign::positive;

  bool positive() const noexcept { return sign == Sign::positive; }

  friend bool operator==(const SignedGenerator&, const SignedGenerator&) = default;
  friend auto operator<=>(const SignedGenerator&, const SignedGenerator&) = default;
};

SignedGenerator invert(const SignedGenerator& s);

/// Rendered as the name, with a trailing apostrophe when negative.
std::string to_string(const SignedGenerator& s);

/// A finite sequence of signed generators. Immutable once built.
class Word {
 public:
  using value_type = SignedGenerator;
  using const_iterator = std::vector<SignedGenerator>::const_iterator;

  Word() = default;
  explicit Word(std::vector<SignedGenerator> items) : items_(std::move(items)) {}
  Word(std::initializer_list<SignedGenerator> items) : items_(items) {}

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const SignedGenerator& operator[](std::size_t i) const { return items_[i]; }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  std::span<const SignedGenerator> items() const noexcept { return items_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<SignedGenerator> items_;
};

Word concat(const Word& x, const Word& y);

/// True iff p + 1 < w.size() and w[p] is the inverse of w[p + 1].
/// Out-of-range positions are not an error.
bool is_redex_at(const Word& w, std::size_t p) noexcept;

/// All redex positions of w in ascending order.
std::vector<std::size_t> find_redexes(const Word& w);

/// Space-separated tokens, "" for the empty word.
std::string to_string(const Word& w);

/// Like to_string, but the empty word is shown as "nil".
std::string display(const Word& w);

}  // namespace fg
