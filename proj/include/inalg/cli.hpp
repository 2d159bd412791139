#pragma once

// Batch command surface. One call runs one command on one problem file and
// returns the exit code together with the text for stdout and stderr.
//
// Exit codes: 0 success, 1 mathematical failure (infeasible comparisons, a
// failed verification, an exhausted step limit), 2 input errors.

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "inalg/problem.hpp"

namespace inalg::cli {

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct Flags {
  std::optional<std::string> order;
  std::optional<std::string> weight;
  std::optional<std::int64_t> cap, dmax, jmax, freeness_bound;
  std::optional<std::string> fiber;
  bool tableau = false;
};

/// `args` excludes the program name: `<command> [file|-|scenario] [flags]`.
/// A missing file or `-` reads the problem from `in`.
Outcome run(const std::vector<std::string>& args, std::istream& in);

/// Runs a command on an already-read problem text.
Outcome execute(const std::string& command, std::string_view problem_text, const Flags& flags);

const std::vector<std::string>& commands();

}  // namespace inalg::cli
