#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "braid/json_io.hpp"

namespace braid::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kParseError = 2,
  kDomainError = 3,
  kBudgetExceeded = 4,
};

struct Settings {
  std::optional<int> n;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::optional<std::size_t> len_max;
  std::size_t budget = 1'000'000;
  int truncation = 16;
};

Json cmd_wp(const BraidWord& b);
/// order is "dehornoy" or "pure".
Json cmd_compare(const std::string& order, const BraidWord& a, const BraidWord& b, const Settings& s);
Json cmd_burau(const BraidWord& b);
Json cmd_modular(const BraidWord& b);
Json cmd_jones(const BraidWord& b);
Json cmd_comb(const BraidWord& b);
Json cmd_tl(const BraidWord& b);
/// kind is "markov" or "order". Exit code kOk iff no violations.
std::pair<Json, int> cmd_fuzz(const std::string& kind, const Settings& s);

/// Runs one command on one line of input text ("b1 | b2" for compare).
/// Library exceptions are turned into {"error": ...} plus an exit code.
std::pair<Json, int> run_line(const std::string& command, const std::string& argument, const Settings& s);

/// Full command line. Writes JSON to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braid::cli
