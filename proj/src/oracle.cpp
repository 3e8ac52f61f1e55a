#include "freegroup/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <sstream>
#include <thread>

#include "freegroup/error.hpp"
#include "freegroup/group.hpp"
#include "freegroup/text.hpp"
#include "freegroup/transform.hpp"
#include "sequence_access.hpp"

namespace fg {

namespace {

void enumerate_into(const Word& w, Steps& prefix, std::vector<Steps>& out) {
  if (w.empty()) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t p : find_redexes(w)) {
    prefix.push_back(p);
    enumerate_into(apply_step(w, p), prefix, out);
    prefix.pop_back();
  }
}

void require_cap(const Word& w, const OracleConfig& config) {
  if (w.size() > config.max_length) throw CapExceeded(w.size(), config.max_length);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::vector<ReductionSequence> enumerate_sequences(const Word& w, const OracleConfig& config) {
  require_cap(w, config);
  std::vector<Steps> all;
  if (w.size() % 2 == 0) {
    Steps prefix;
    enumerate_into(w, prefix, all);
  }
  std::vector<ReductionSequence> out;
  out.reserve(all.size());
  for (auto& steps : all) out.push_back(SequenceAccess::trusted(w, std::move(steps)));
  return out;
}

std::optional<std::size_t> MoveGraph::index_of(const Steps& steps) const {
  auto it = index_.find(steps);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<MoveGraph::Arc> MoveGraph::edges() const {
  std::vector<Arc> out;
  for (const auto& a : arcs_)
    if (a.from < a.to) out.push_back(a);
  return out;
}

MoveGraph build_move_graph(const Word& w, const OracleConfig& config) {
  MoveGraph g;
  g.word_ = w;
  auto sequences = enumerate_sequences(w, config);
  g.nodes_.reserve(sequences.size());
  for (const auto& r : sequences) {
    g.index_.emplace(r.steps(), g.nodes_.size());
    g.nodes_.push_back(r.steps());
  }
  g.out_.resize(sequences.size());
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    for (const auto& [move, target] : applicable_moves(sequences[i])) {
      auto j = g.index_of(target.steps());
      if (!j)
        throw std::logic_error("move " + to_string(move) + " from " +
                               format_positions(sequences[i].steps()) +
                               " leaves the set of reduction sequences");
      g.out_[i].push_back(g.arcs_.size());
      g.arcs_.push_back({i, *j, move});
    }
  }
  return g;
}

std::vector<std::size_t> bfs_distances(const MoveGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.nodes().size(), unreachable);
  std::deque<std::size_t> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t a : g.out_arcs(u)) {
      std::size_t v = g.arcs()[a].to;
      if (dist[v] == unreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool check_connected(const MoveGraph& g) {
  if (g.nodes().size() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == unreachable; });
}

std::string to_dot(const MoveGraph& g) {
  std::ostringstream out;
  out << "graph moves {\n";
  out << "  label=\"" << to_string(g.word()) << "\";\n";
  for (std::size_t i = 0; i < g.nodes().size(); ++i)
    out << "  n" << i << " [label=\"" << format_positions(g.nodes()[i]) << "\"];\n";
  for (const auto& e : g.edges())
    out << "  n" << e.from << " -- n" << e.to << " [label=\"" << to_string(e.move) << "\"];\n";
  out << "}\n";
  return out.str();
}

bool check_triviality_witness(const Word& w, const OracleConfig& config) {
  return check_connected(build_move_graph(w, config));
}

CheckReport check_word(const Word& w, const CheckConfig& config) {
  CheckReport report;
  report.words_checked = 1;
  const std::string text = to_string(w);
  auto fail = [&](std::string kind, Steps r, Steps s, std::optional<std::size_t> move,
                  std::string detail) {
    report.counterexamples.push_back(
        {text, std::move(kind), std::move(r), std::move(s), move, std::move(detail)});
  };

  MoveGraph g = build_move_graph(w, config.oracle);
  const auto& nodes = g.nodes();
  report.sequences_enumerated = nodes.size();

  // Step-count law, and reducibility against the normal form.
  for (const auto& steps : nodes)
    if (steps.size() * 2 != w.size())
      fail("step-count", steps, {}, std::nullopt,
           std::to_string(steps.size()) + " steps for length " + std::to_string(w.size()));
  if (w.size() % 2 == 1 && !nodes.empty())
    fail("step-count", nodes.front(), {}, std::nullopt, "odd word has a reduction sequence");
  const bool reducible = normal_form(w).empty();
  if (reducible != !nodes.empty())
    fail("red-nf", {}, {}, std::nullopt,
         reducible ? "empty normal form but no sequence" : "sequence but nonempty normal form");
  if (nodes.empty()) return report;
  report.reducible_words = 1;

  std::vector<ReductionSequence> sequences;
  sequences.reserve(nodes.size());
  for (const auto& steps : nodes) {
    try {
      sequences.push_back(validate_sequence(w, steps));
    } catch (const Error& e) {
      fail("step-count", steps, {}, std::nullopt, std::string("enumerated sequence invalid: ") + e.what());
      return report;
    }
  }

  if (!check_connected(g)) fail("disconnected", {}, {}, std::nullopt, "move graph is disconnected");

  // transform_to on every ordered pair, or a seeded sample of them.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (nodes.size() <= config.exhaustive_pair_limit) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) pairs.emplace_back(i, j);
  } else {
    std::mt19937_64 rng(config.seed ^ fnv1a(text));
    std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
    for (std::size_t k = 0; k < config.sampled_pairs; ++k) pairs.emplace_back(pick(rng), pick(rng));
  }

  const std::size_t bound = transform_chain_bound(w.size() / 2);
  std::map<std::size_t, std::vector<std::size_t>> distances;
  for (auto [i, j] : pairs) {
    const auto& r = sequences[i];
    const auto& s = sequences[j];
    ++report.pairs_verified;
    MoveChain chain;
    try {
      chain = transform_to(r, s);
    } catch (const Error& e) {
      fail("transform", r.steps(), s.steps(), std::nullopt, e.what());
      continue;
    }
    report.max_chain_length = std::max(report.max_chain_length, chain.size());
    if (chain.size() > bound)
      fail("transform", r.steps(), s.steps(), std::nullopt,
           "chain length " + std::to_string(chain.size()) + " exceeds " + std::to_string(bound));

    ReductionSequence current = r;
    bool replayed = true;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      try {
        current = apply_move(current, chain[k]);
      } catch (const Error& e) {
        fail("transform", r.steps(), s.steps(), k, e.what());
        replayed = false;
        break;
      }
      if (!g.index_of(current.steps())) {
        fail("transform", r.steps(), s.steps(), k, "intermediate sequence is not a graph node");
        replayed = false;
        break;
      }
    }
    if (replayed && current != s)
      fail("transform", r.steps(), s.steps(), std::nullopt,
           "chain replays to " + format_positions(current.steps()));

    auto it = distances.find(i);
    if (it == distances.end()) it = distances.emplace(i, bfs_distances(g, i)).first;
    if (it->second[j] != unreachable)
      report.max_bfs_distance = std::max(report.max_bfs_distance, it->second[j]);
  }

  if (config.check_front) {
    const auto redexes = find_redexes(w);
    for (const auto& r : sequences) {
      for (std::size_t p : redexes) {
        ++report.front_reductions_verified;
        try {
          FrontReduction front = front_reduction(r, p);
          validate_sequence(w, front.sequence.steps());
          if (front.sequence.steps().front() != p)
            fail("front", r.steps(), front.sequence.steps(), std::nullopt,
                 "first step is not " + std::to_string(p));
          else if (apply_chain(r, front.chain) != front.sequence)
            fail("front", r.steps(), front.sequence.steps(), std::nullopt, "chain does not replay");
          else if (front.chain.size() > r.size())
            fail("front", r.steps(), front.sequence.steps(), std::nullopt, "chain too long");
        } catch (const Error& e) {
          fail("front", r.steps(), {}, std::nullopt,
               "redex " + std::to_string(p) + ": " + e.what());
        }
      }
    }
  }

  if (config.check_move_algebra) {
    for (const auto& arc : g.arcs()) {
      ++report.moves_verified;
      const auto& from = sequences[arc.from];
      try {
        ReductionSequence moved = apply_move(from, arc.move);
        validate_sequence(w, moved.steps());
        if (moved.steps() != nodes[arc.to])
          fail("move", from.steps(), moved.steps(), std::nullopt, to_string(arc.move) + " target mismatch");
        else if (apply_move(moved, inverse(arc.move)) != from)
          fail("move", from.steps(), moved.steps(), std::nullopt,
               to_string(inverse(arc.move)) + " does not undo " + to_string(arc.move));
      } catch (const Error& e) {
        fail("move", from.steps(), {}, std::nullopt, to_string(arc.move) + ": " + e.what());
      }
    }
  }
  return report;
}

namespace {

void merge(CheckReport& into, CheckReport&& part) {
  into.words_checked += part.words_checked;
  into.reducible_words += part.reducible_words;
  into.sequences_enumerated += part.sequences_enumerated;
  into.pairs_verified += part.pairs_verified;
  into.front_reductions_verified += part.front_reductions_verified;
  into.moves_verified += part.moves_verified;
  into.max_chain_length = std::max(into.max_chain_length, part.max_chain_length);
  into.max_bfs_distance = std::max(into.max_bfs_distance, part.max_bfs_distance);
  for (auto& c : part.counterexamples) into.counterexamples.push_back(std::move(c));
}

}  // namespace

CheckReport check_words(const std::vector<Word>& words, const CheckConfig& config) {
  for (const auto& w : words) require_cap(w, config.oracle);

  std::vector<std::size_t> order(words.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::string> texts;
  texts.reserve(words.size());
  for (const auto& w : words) texts.push_back(to_string(w));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return texts[a] < texts[b]; });

  std::vector<CheckReport> parts(words.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < order.size(); k = next++)
      parts[k] = check_word(words[order[k]], config);
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(words.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  CheckReport total;
  for (auto& part : parts) merge(total, std::move(part));
  return total;
}

std::vector<SignedGenerator> signed_alphabet(const std::vector<Generator>& alphabet) {
  std::vector<SignedGenerator> out;
  for (const auto& g : alphabet) {
    out.push_back({g, Sign::positive});
    out.push_back({g, Sign::negative});
  }
  return out;
}

std::vector<Word> all_words(const std::vector<Generator>& alphabet, std::size_t length) {
  const auto letters = signed_alphabet(alphabet);
  std::vector<Word> out;
  if (letters.empty()) {
    if (length == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> digits(length, 0);
  while (true) {
    std::vector<SignedGenerator> items;
    items.reserve(length);
    for (std::size_t d : digits) items.push_back(letters[d]);
    out.emplace_back(std::move(items));
    std::size_t k = length;
    while (k > 0 && ++digits[k - 1] == letters.size()) digits[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

Word random_reducible_word(const std::vector<Generator>& alphabet, std::size_t half_length,
                           std::mt19937_64& rng) {
  const auto letters = signed_alphabet(alphabet);
  if (letters.empty() && half_length > 0) throw Error("empty alphabet");
  std::vector<SignedGenerator> items;
  for (std::size_t k = 0; k < half_length; ++k) {
    std::uniform_int_distribution<std::size_t> where(0, items.size());
    std::uniform_int_distribution<std::size_t> which(0, letters.size() - 1);
    auto at = items.begin() + static_cast<std::ptrdiff_t>(where(rng));
    const auto& a = letters[which(rng)];
    at = items.insert(at, invert(a));
    items.insert(at, a);
  }
  return Word(std::move(items));
}

ReductionSequence random_sequence(const Word& w, std::mt19937_64& rng) {
  Steps steps;
  Word current = w;
  while (!current.empty()) {
    auto redexes = find_redexes(current);
    if (redexes.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
    std::size_t p = redexes[pick(rng)];
    steps.push_back(p);
    current = apply_step(current, p);
  }
  return validate_sequence(w, steps);
}

}  // namespace fg
