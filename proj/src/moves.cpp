#include "freegroup/moves.hpp"

#include <charconv>

#include "freegroup/error.hpp"
#include "sequence_access.hpp"

namespace fg {

namespace {

void require_step(const ReductionSequence& r, std::size_t i, std::size_t needed, const char* what) {
  if (i + needed > r.size())
    throw IndexOutOfRange(std::string(what) + " at step " + std::to_string(i) + " needs " +
                          std::to_string(needed) + " step(s), sequence has " +
                          std::to_string(r.size()));
}

// Overlap check against the word before step i.
bool overlaps(const Word& before, std::size_t p, Direction direction) {
  if (direction == Direction::right) return p + 2 < before.size() && before[p + 2] == before[p];
  return p >= 1 && before[p - 1] == before[p + 1];
}

ReductionSequence with_step(const ReductionSequence& r, std::size_t i, std::size_t position) {
  Steps steps = r.steps();
  steps[i] = position;
  return SequenceAccess::trusted(r.word(), std::move(steps));
}

}  // namespace

ReductionSequence swap(const ReductionSequence& r, std::size_t i) {
  require_step(r, i, 2, "swap");
  std::size_t p = r.steps()[i];
  std::size_t q = r.steps()[i + 1];
  if (q + 1 == p)
    throw NotIndependent("swap at step " + std::to_string(i) + ": step " + std::to_string(i + 1) +
                         " reduces the pair enclosing step " + std::to_string(i));
  Steps steps = r.steps();
  if (q + 2 <= p) {
    steps[i] = q;
    steps[i + 1] = p - 2;
  } else {
    steps[i] = q + 2;
    steps[i + 1] = p;
  }
  return SequenceAccess::trusted(r.word(), std::move(steps));
}

ReductionSequence overlap_switch(const ReductionSequence& r, std::size_t i, Direction direction) {
  require_step(r, i, 1, direction == Direction::left ? "ovl" : "ovr");
  std::size_t p = r.steps()[i];
  if (!overlaps(word_before_step(r, i), p, direction))
    throw NoOverlap(std::string(direction == Direction::left ? "ovl" : "ovr") + " at step " +
                    std::to_string(i) + ": no overlapping redex next to position " +
                    std::to_string(p));
  return with_step(r, i, direction == Direction::left ? p - 1 : p + 1);
}

ReductionSequence apply_move(const ReductionSequence& r, const Move& m) {
  switch (m.kind) {
    case MoveKind::swap:
      return swap(r, m.at);
    case MoveKind::overlap_left:
      return overlap_switch(r, m.at, Direction::left);
    case MoveKind::overlap_right:
      return overlap_switch(r, m.at, Direction::right);
  }
  throw std::logic_error("unknown move kind");
}

ReductionSequence apply_chain(const ReductionSequence& r, const MoveChain& chain) {
  ReductionSequence current = r;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    try {
      current = apply_move(current, chain[k]);
    } catch (MoveError& e) {
      e.set_chain_index(k);
      throw;
    }
  }
  return current;
}

Move inverse(const Move& m) noexcept {
  switch (m.kind) {
    case MoveKind::overlap_left:
      return {MoveKind::overlap_right, m.at};
    case MoveKind::overlap_right:
      return {MoveKind::overlap_left, m.at};
    case MoveKind::swap:
      break;
  }
  return m;
}

std::vector<std::pair<Move, ReductionSequence>> applicable_moves(const ReductionSequence& r) {
  std::vector<std::pair<Move, ReductionSequence>> out;
  Word before = r.word();
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::size_t p = r.steps()[i];
    if (i + 1 < r.size() && r.steps()[i + 1] + 1 != p)
      out.emplace_back(Move{MoveKind::swap, i}, swap(r, i));
    if (overlaps(before, p, Direction::left))
      out.emplace_back(Move{MoveKind::overlap_left, i}, with_step(r, i, p - 1));
    if (overlaps(before, p, Direction::right))
      out.emplace_back(Move{MoveKind::overlap_right, i}, with_step(r, i, p + 1));
    before = apply_step(before, p);
  }
  return out;
}

std::string to_string(const Move& m) {
  const char* name = m.kind == MoveKind::swap           ? "swap"
                     : m.kind == MoveKind::overlap_left ? "ovl"
                                                        : "ovr";
  return std::string(name) + "@" + std::to_string(m.at);
}

std::string to_string(const MoveChain& chain) {
  std::string out;
  for (const auto& m : chain) {
    if (!out.empty()) out += ',';
    out += to_string(m);
  }
  return out;
}

namespace {

Move parse_move_at(std::string_view text, std::size_t offset) {
  auto fail = [&] { return ParseError(offset, std::string(text), "invalid move"); };
  auto at = text.find('@');
  if (at == std::string_view::npos) throw fail();
  std::string_view name = text.substr(0, at);
  std::string_view index = text.substr(at + 1);

  Move m;
  if (name == "swap")
    m.kind = MoveKind::swap;
  else if (name == "ovl")
    m.kind = MoveKind::overlap_left;
  else if (name == "ovr")
    m.kind = MoveKind::overlap_right;
  else
    throw fail();

  auto [ptr, ec] = std::from_chars(index.data(), index.data() + index.size(), m.at);
  if (index.empty() || ec != std::errc() || ptr != index.data() + index.size()) throw fail();
  return m;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Move parse_move(std::string_view text) {
  std::size_t offset = 0;
  return parse_move_at(trim(text, offset), offset);
}

MoveChain parse_chain(std::string_view text) {
  MoveChain chain;
  std::size_t offset = 0;
  if (trim(text, offset).empty()) return chain;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::size_t piece_offset = start;
    chain.push_back(parse_move_at(trim(piece, piece_offset), piece_offset));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return chain;
}

}  // namespace fg
