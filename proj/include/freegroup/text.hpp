#pragma once

// Text forms shared by the CLI and the Python bindings.
//
//   word     := token*            (whitespace separated)
//   token    := identifier | identifier "'"
//   positions := decimal ( ("," | whitespace) decimal )*

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freegroup/core.hpp"

namespace fg {

/// Throws ParseError carrying the byte offset and offending token.
Word parse_word(std::string_view text);

/// Parses a comma- or whitespace-separated list of positions. "" is the
/// empty list.
std::vector<std::size_t> parse_positions(std::string_view text);

/// Comma-separated, no spaces: "3,0,0".
std::string format_positions(std::span<const std::size_t> positions);

}  // namespace fg
