#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A text token did not match the word, sequence or move grammar.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string token, const std::string& what)
      : Error(what + " at offset " + std::to_string(offset) + ": '" + token + "'"),
        offset_(offset),
        token_(std::move(token)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t offset_;
  std::string token_;
};

/// A reduction step names a position that is not a redex in its context.
class InvalidRedex : public Error {
 public:
  InvalidRedex(std::optional<std::size_t> step, std::size_t position, std::string pair,
               const std::string& what)
      : Error(what), step_(step), position_(position), pair_(std::move(pair)) {}

  /// Index of the offending step, when the failure happened inside a sequence.
  std::optional<std::size_t> step() const noexcept { return step_; }
  std::size_t position() const noexcept { return position_; }
  /// Rendered text of the pair found at the position ("" if out of range).
  const std::string& pair() const noexcept { return pair_; }

 private:
  std::optional<std::size_t> step_;
  std::size_t position_;
  std::string pair_;
};

/// Every step was a redex but the final word is not empty.
class IncompleteReduction : public Error {
 public:
  IncompleteReduction(std::string remainder, const std::string& what)
      : Error(what), remainder_(std::move(remainder)) {}

  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

/// Two sequences that should share a starting word do not.
class WordMismatch : public Error {
 public:
  using Error::Error;
};

/// The oracle refuses words longer than its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t length, std::size_t cap)
      : Error("word length " + std::to_string(length) + " exceeds cap " + std::to_string(cap)),
        length_(length),
        cap_(cap) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t length_;
  std::size_t cap_;
};

/// Base for moves that cannot be applied. When raised from inside a chain,
/// chain_index() names the failing move.
class MoveError : public Error {
 public:
  using Error::Error;

  std::optional<std::size_t> chain_index() const noexcept { return chain_index_; }
  void set_chain_index(std::size_t index) noexcept { chain_index_ = index; }

 private:
  std::optional<std::size_t> chain_index_;
};

class NotIndependent : public MoveError {
 public:
  using MoveError::MoveError;
};

class NoOverlap : public MoveError {
 public:
  using MoveError::MoveError;
};

class IndexOutOfRange : public MoveError {
 public:
  using MoveError::MoveError;
};

}  // namespace fg
