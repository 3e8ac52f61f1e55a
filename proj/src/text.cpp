#include "freegroup/text.hpp"

#include <charconv>

#include "freegroup/error.hpp"

namespace fg {

namespace {

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<SignedGenerator> items;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    std::string_view token = text.substr(start, i - start);

    Sign sign = Sign::positive;
    std::string_view name = token;
    if (name.ends_with('\'')) {
      sign = Sign::negative;
      name.remove_suffix(1);
    }
    if (!Generator::is_identifier(name))
      throw ParseError(start, std::string(token), "invalid word token");
    items.push_back({Generator(std::string(name)), sign});
  }
  return Word(std::move(items));
}

std::vector<std::size_t> parse_positions(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  bool expect_value = true;  // false right after a number, until a separator
  bool after_comma = false;
  while (i < text.size()) {
    char c = text[i];
    if (is_space(c)) {
      ++i;
      expect_value = true;
      continue;
    }
    if (c == ',') {
      if (out.empty() || after_comma) throw ParseError(i, ",", "unexpected separator");
      after_comma = true;
      expect_value = true;
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i]) && text[i] != ',') ++i;
    std::string_view token = text.substr(start, i - start);
    if (!expect_value) throw ParseError(start, std::string(token), "missing separator");
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError(start, std::string(token), "invalid position");
    out.push_back(value);
    after_comma = false;
    expect_value = false;
  }
  if (after_comma) throw ParseError(text.size(), ",", "trailing separator");
  return out;
}

std::string format_positions(std::span<const std::size_t> positions) {
  std::string out;
  for (std::size_t p : positions) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

}  // namespace fg
