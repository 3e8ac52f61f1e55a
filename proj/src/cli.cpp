#include "freegroup/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "freegroup/error.hpp"
#include "freegroup/group.hpp"
#include "freegroup/moves.hpp"
#include "freegroup/oracle.hpp"
#include "freegroup/text.hpp"
#include "freegroup/transform.hpp"

namespace fg::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "1";

json envelope(const char* command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

json steps_json(const Steps& steps) { return json(steps); }

std::vector<Generator> parse_alphabet(const std::string& text) {
  std::vector<Generator> out;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    name.erase(std::remove_if(name.begin(), name.end(), [](char c) { return c == ' '; }), name.end());
    Generator g(name);
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  }
  if (out.empty()) throw ParseError(0, text, "empty alphabet");
  return out;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// A sequence given either as "word" + "positions" or as a JSON object in the
// word argument.
ReductionSequence sequence_argument(const std::string& word_text, const std::string& steps_text) {
  auto first = word_text.find_first_not_of(" \t\n");
  if (first != std::string::npos && word_text[first] == '{')
    return sequence_from_json(json::parse(word_text));
  return validate_sequence(parse_word(word_text), parse_positions(steps_text));
}

json counterexample_json(const Counterexample& c) {
  json j;
  j["word"] = c.word;
  j["kind"] = c.kind;
  j["r"] = c.r;
  j["s"] = c.s;
  j["failing_move"] = c.failing_move ? json(*c.failing_move) : json(nullptr);
  j["detail"] = c.detail;
  return j;
}

}  // namespace

json to_json(const ReductionSequence& r) {
  json j;
  j["word"] = to_string(r.word());
  j["steps"] = r.steps();
  return j;
}

ReductionSequence sequence_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("word") || !j.contains("steps"))
    throw Error("sequence JSON needs \"word\" and \"steps\"");
  return validate_sequence(parse_word(j.at("word").get<std::string>()),
                           j.at("steps").get<std::vector<std::size_t>>());
}

std::vector<std::string> render_trace(const Word& w, const std::vector<std::size_t>& steps) {
  std::vector<std::string> lines{display(w)};
  Word current = w;
  for (std::size_t p : steps) {
    std::string pair = to_string(Word{current[p], current[p + 1]});
    current = apply_step(current, p);
    lines.push_back("--(" + pair + ")--> " + display(current));
  }
  return lines;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduction sequences and normal forms in free groups", "freegroup"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  bool as_json = false;
  std::string w1, w2, seq_r, seq_s, alphabet = "a,b";
  bool trace = false, dot = false, exhaustive = false;
  std::size_t max_len = 8, cap = OracleConfig{}.max_length, samples = 0;
  std::size_t pair_limit = 200, sampled_pairs = 50;
  std::uint64_t seed = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Machine-readable output"); };

  auto* nf = app.add_subcommand("nf", "Normal form of a word");
  nf->add_option("word", w1)->required();
  json_flag(nf);

  auto* mul_cmd = app.add_subcommand("mul", "Product of two words, normalized");
  mul_cmd->add_option("u", w1)->required();
  mul_cmd->add_option("v", w2)->required();
  json_flag(mul_cmd);

  auto* inv_cmd = app.add_subcommand("inv", "Inverse of a word, normalized");
  inv_cmd->add_option("word", w1)->required();
  json_flag(inv_cmd);

  auto* eq_cmd = app.add_subcommand("eq", "Exit 0 if the words are equal in the group, 1 if not");
  eq_cmd->add_option("u", w1)->required();
  eq_cmd->add_option("v", w2)->required();
  json_flag(eq_cmd);

  auto* abel = app.add_subcommand("abel", "Exponent sum per generator (JSON)");
  abel->add_option("word", w1)->required();
  json_flag(abel);

  auto* reduce = app.add_subcommand("reduce", "Run or find a reduction of a word");
  reduce->add_option("word", w1, "Word text, or a JSON sequence object")->required();
  reduce->add_option("steps", seq_r, "Positions, e.g. 3,0,0");
  reduce->add_flag("--trace", trace, "Show every intermediate word");
  json_flag(reduce);

  auto* sequences = app.add_subcommand("sequences", "List every reduction sequence of a word");
  sequences->add_option("word", w1)->required();
  sequences->add_option("--cap", cap, "Maximum word length")->capture_default_str();
  json_flag(sequences);

  auto* connect = app.add_subcommand("connect", "Move chain transforming one sequence into another");
  connect->add_option("word", w1)->required();
  connect->add_option("from", seq_r)->required();
  connect->add_option("to", seq_s)->required();
  connect->add_flag("--trace", trace, "Emit the full replay trace as JSON");
  json_flag(connect);

  auto* graph = app.add_subcommand("graph", "Move graph of a word");
  graph->add_option("word", w1)->required();
  graph->add_flag("--dot", dot, "Graphviz output");
  graph->add_option("--cap", cap, "Maximum word length")->capture_default_str();
  json_flag(graph);

  auto* check = app.add_subcommand("check", "Cross-check algorithms against the move-graph oracle");
  check->add_option("--alphabet", alphabet, "Comma-separated generators")->capture_default_str();
  check->add_option("--max-len", max_len, "Longest word to check")->capture_default_str();
  auto* ex = check->add_flag("--exhaustive", exhaustive, "Every word up to --max-len (default)");
  auto* sm = check->add_option("--samples", samples, "Random reducible words instead");
  ex->excludes(sm);
  check->add_option("--seed", seed, "Seed for sampling")->capture_default_str();
  check->add_option("--cap", cap, "Maximum word length")->capture_default_str();
  check->add_option("--pair-limit", pair_limit, "Check all pairs up to this many sequences")
      ->capture_default_str();
  check->add_option("--sampled-pairs", sampled_pairs, "Pairs per word above the limit")
      ->capture_default_str();
  check->add_option("--jobs", jobs, "Worker threads");
  json_flag(check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : failure;
  }

  try {
    if (nf->parsed()) {
      NormalWord n = normal_form(parse_word(w1));
      if (as_json) {
        json j = envelope("nf");
        j["input"] = to_string(parse_word(w1));
        j["normal_form"] = to_string(n.word());
        print_json(out, j);
      } else {
        out << display(n.word()) << '\n';
      }
      return ok;
    }

    if (mul_cmd->parsed() || inv_cmd->parsed()) {
      NormalWord u = normal_form(parse_word(w1));
      NormalWord result = mul_cmd->parsed() ? mul(u, normal_form(parse_word(w2))) : inv(u);
      if (as_json) {
        json j = envelope(mul_cmd->parsed() ? "mul" : "inv");
        j["result"] = to_string(result.word());
        print_json(out, j);
      } else {
        out << display(result.word()) << '\n';
      }
      return ok;
    }

    if (eq_cmd->parsed()) {
      bool equal = eq(parse_word(w1), parse_word(w2));
      if (as_json) {
        json j = envelope("eq");
        j["equal"] = equal;
        print_json(out, j);
      } else {
        out << (equal ? "equal" : "not equal") << '\n';
      }
      return equal ? ok : negative;
    }

    if (abel->parsed()) {
      json j = envelope("abel");
      json sums = json::object();
      for (const auto& [g, n] : abelianize(parse_word(w1))) sums[g.name()] = n;
      j["exponents"] = sums;
      print_json(out, j);
      return ok;
    }

    if (reduce->parsed()) {
      bool given = !seq_r.empty() || w1.find('{') != std::string::npos;
      Word word;
      Steps steps;
      if (given) {
        ReductionSequence r = sequence_argument(w1, seq_r);
        word = r.word();
        steps = r.steps();
      } else {
        word = parse_word(w1);
        steps = normalize_with_witness(word).steps;
      }
      std::vector<Word> words{word};
      for (std::size_t p : steps) words.push_back(apply_step(words.back(), p));

      if (as_json) {
        json j = envelope("reduce");
        j["word"] = to_string(word);
        j["steps"] = steps;
        j["normal_form"] = to_string(words.back());
        j["reduces_to_nil"] = words.back().empty();
        json t = json::array();
        for (std::size_t k = 0; k < steps.size(); ++k) {
          json step;
          step["position"] = steps[k];
          step["redex"] = to_string(Word{words[k][steps[k]], words[k][steps[k] + 1]});
          step["result"] = to_string(words[k + 1]);
          t.push_back(step);
        }
        j["trace"] = t;
        print_json(out, j);
      } else if (given || trace) {
        for (const auto& line : render_trace(word, steps)) out << line << '\n';
      } else {
        out << display(words.back()) << '\n';
        out << "order: " << format_positions(steps) << '\n';
      }
      return ok;
    }

    if (sequences->parsed()) {
      Word word = parse_word(w1);
      auto all = enumerate_sequences(word, {cap});
      if (as_json) {
        json j = envelope("sequences");
        j["word"] = to_string(word);
        json list = json::array();
        for (const auto& r : all) list.push_back(to_json(r));
        j["sequences"] = list;
        print_json(out, j);
      } else {
        for (const auto& r : all) out << format_positions(r.steps()) << '\n';
      }
      return ok;
    }

    if (connect->parsed()) {
      Word word = parse_word(w1);
      ReductionSequence r = validate_sequence(word, parse_positions(seq_r));
      ReductionSequence s = validate_sequence(word, parse_positions(seq_s));
      MoveChain chain = transform_to(r, s);
      if (as_json || trace) {
        json j = envelope("connect");
        j["word"] = to_string(word);
        j["from"] = r.steps();
        j["to"] = s.steps();
        json moves = json::array();
        for (const auto& m : chain) moves.push_back(to_string(m));
        j["chain"] = moves;
        if (trace) {
          json replay = json::array();
          ReductionSequence current = r;
          replay.push_back(steps_json(current.steps()));
          for (const auto& m : chain) {
            current = apply_move(current, m);
            replay.push_back(steps_json(current.steps()));
          }
          j["trace"] = replay;
        }
        print_json(out, j);
      } else {
        out << to_string(chain) << '\n';
      }
      return ok;
    }

    if (graph->parsed()) {
      MoveGraph g = build_move_graph(parse_word(w1), {cap});
      if (dot) {
        out << to_dot(g);
      } else if (as_json) {
        json j = envelope("graph");
        j["word"] = to_string(g.word());
        json nodes = json::array();
        for (const auto& n : g.nodes()) nodes.push_back(steps_json(n));
        j["nodes"] = nodes;
        json edges = json::array();
        for (const auto& e : g.edges()) {
          json edge;
          edge["from"] = e.from;
          edge["to"] = e.to;
          edge["move"] = to_string(e.move);
          edges.push_back(edge);
        }
        j["edges"] = edges;
        j["connected"] = check_connected(g);
        print_json(out, j);
      } else {
        out << g.nodes().size() << " sequences, " << g.edges().size() << " edges, "
            << (check_connected(g) ? "connected" : "disconnected") << '\n';
      }
      return ok;
    }

    if (check->parsed()) {
      auto letters = parse_alphabet(alphabet);
      if (max_len > cap) throw CapExceeded(max_len, cap);
      std::vector<Word> words;
      if (samples > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> half(1, std::max<std::size_t>(1, max_len / 2));
        for (std::size_t k = 0; k < samples; ++k)
          words.push_back(random_reducible_word(letters, half(rng), rng));
      } else {
        for (std::size_t n = 0; n <= max_len; ++n)
          for (auto& w : all_words(letters, n)) words.push_back(std::move(w));
      }
      CheckConfig config;
      config.oracle.max_length = cap;
      config.exhaustive_pair_limit = pair_limit;
      config.sampled_pairs = sampled_pairs;
      config.seed = seed;
      config.jobs = jobs;
      CheckReport report = check_words(words, config);

      if (as_json) {
        json j = envelope("check");
        j["words_checked"] = report.words_checked;
        j["reducible_words"] = report.reducible_words;
        j["sequences_enumerated"] = report.sequences_enumerated;
        j["pairs_verified"] = report.pairs_verified;
        j["front_reductions_verified"] = report.front_reductions_verified;
        j["moves_verified"] = report.moves_verified;
        j["max_chain_length"] = report.max_chain_length;
        j["max_bfs_distance"] = report.max_bfs_distance;
        json ces = json::array();
        for (const auto& c : report.counterexamples) ces.push_back(counterexample_json(c));
        j["counterexamples"] = ces;
        print_json(out, j);
      } else {
        out << "words checked:        " << report.words_checked << '\n'
            << "reducible words:      " << report.reducible_words << '\n'
            << "sequences enumerated: " << report.sequences_enumerated << '\n'
            << "pairs verified:       " << report.pairs_verified << '\n'
            << "front reductions:     " << report.front_reductions_verified << '\n'
            << "moves verified:       " << report.moves_verified << '\n'
            << "max chain length:     " << report.max_chain_length << '\n'
            << "max BFS distance:     " << report.max_bfs_distance << '\n'
            << "counterexamples:      " << report.counterexamples.size() << '\n';
        for (const auto& c : report.counterexamples)
          out << "  [" << c.kind << "] '" << c.word << "' r=" << format_positions(c.r)
              << " s=" << format_positions(c.s) << ": " << c.detail << '\n';
      }
      return report.ok() ? ok : negative;
    }
  } catch (const InvalidRedex& e) {
    err << "error: invalid redex: " << e.what() << '\n';
    return failure;
  } catch (const IncompleteReduction& e) {
    err << "error: incomplete reduction: " << e.what() << '\n';
    return failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
  return failure;
}

}  // namespace fg::cli
