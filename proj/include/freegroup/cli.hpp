#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "freegroup/reduction.hpp"

namespace fg::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { ok = 0, negative = 1, failure = 2 };

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"word": "<word text>", "steps": [...]}
nlohmann::ordered_json to_json(const ReductionSequence& r);

/// Inverse of to_json; validates the steps against the word.
ReductionSequence sequence_from_json(const nlohmann::json& j);

/// One line per step: "--(c c')--> a a' b b'", preceded by the start word.
std::vector<std::string> render_trace(const Word& w, const std::vector<std::size_t>& steps);

}  // namespace fg::cli
