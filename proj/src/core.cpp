#include "freegroup/core.hpp"

#include "freegroup/error.hpp"

namespace fg {

namespace {

bool is_ident_start(char c) noexcept {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_char(char c) noexcept { return is_ident_start(c) || (c >= '0' && c <= '9'); }

}  // namespace

bool Generator::is_identifier(std::string_view text) noexcept {
  if (text.empty() || !is_ident_start(text.front())) return false;
  for (char c : text.substr(1))
    if (!is_ident_char(c)) return false;
  return true;
}

Generator::Generator(std::string name) : name_(std::move(name)) {
  if (!is_identifier(name_)) throw ParseError(0, name_, "invalid generator name");
}

SignedGenerator invert(const SignedGenerator& s) {
  return {s.gen, s.positive() ? Sign::negative : Sign::positive};
}

std::string to_string(const SignedGenerator& s) {
  return s.positive() ? s.gen.name() : s.gen.name() + "'";
}

Word concat(const Word& x, const Word& y) {
  std::vector<SignedGenerator> items;
  items.reserve(x.size() + y.size());
  items.insert(items.end(), x.begin(), x.end());
  items.insert(items.end(), y.begin(), y.end());
  return Word(std::move(items));
}

bool is_redex_at(const Word& w, std::size_t p) noexcept {
  if (w.size() < 2 || p > w.size() - 2) return false;
  const auto& l = w[p];
  const auto& r = w[p + 1];
  return l.sign != r.sign && l.gen == r.gen;
}

std::vector<std::size_t> find_redexes(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (is_redex_at(w, p)) out.push_back(p);
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  return out;
}

std::string display(const Word& w) { return w.empty() ? "nil" : to_string(w); }

}  // namespace fg
