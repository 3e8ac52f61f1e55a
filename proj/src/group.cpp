#include "freegroup/group.hpp"

namespace fg {

Normalization normalize_with_witness(const Word& w) {
  std::vector<SignedGenerator> stack;
  std::vector<std::size_t> steps;
  stack.reserve(w.size());
  for (const auto& s : w) {
    // The current word is stack ++ (rest of w), so the top of the stack and
    // s sit at positions stack.size() - 1 and stack.size().
    if (!stack.empty() && stack.back() == invert(s)) {
      steps.push_back(stack.size() - 1);
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  Normalization out;
  out.normal = normal_form(Word(std::move(stack)));
  out.steps = std::move(steps);
  return out;
}

NormalWord normal_form(const Word& w) {
  std::vector<SignedGenerator> stack;
  stack.reserve(w.size());
  for (const auto& s : w) {
    if (!stack.empty() && stack.back() == invert(s))
      stack.pop_back();
    else
      stack.push_back(s);
  }
  return NormalWord(Word(std::move(stack)));
}

NormalWord mul(const NormalWord& u, const NormalWord& v) {
  return normal_form(concat(u.word(), v.word()));
}

NormalWord inv(const NormalWord& u) {
  std::vector<SignedGenerator> items;
  items.reserve(u.size());
  for (auto it = u.word().items().rbegin(); it != u.word().items().rend(); ++it)
    items.push_back(invert(*it));
  return NormalWord(Word(std::move(items)));
}

bool eq(const Word& u, const Word& v) { return normal_form(u) == normal_form(v); }

Word cons(const SignedGenerator& c, const Word& w) { return concat(Word{c}, w); }

std::map<Generator, std::int64_t> abelianize(const Word& w) {
  std::map<Generator, std::int64_t> sums;
  for (const auto& s : w) sums[s.gen] += s.positive() ? 1 : -1;
  std::erase_if(sums, [](const auto& kv) { return kv.second == 0; });
  return sums;
}

}  // namespace fg
