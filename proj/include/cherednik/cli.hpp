#pragma once

// Command-line frontend. Subcommands:
//   info       --type T [--format json|table]
//   classify   --type T --chi X (--k K | --k1 K1 [--k2 K2]) [--max-degree N]
//              [--format json|csv|table]
//   gram       --type T --chi X (--k K | --k1 K1 [--k2 K2] | --symbolic) --degree n
//              [--format json|table]
//   sweep      --type T --chi X --k1-range a:b:step [--k2-range a:b:step]
//              [--threads N] [--max-degree N]
//   conjecture --max-q Q
//   selftest   [--seed S]
// Exit codes: 0 success, 1 usage or parse error, 2 internal invariant
// violation. Diagnostics go to the error stream.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cherednik/scalars.hpp"

namespace cherednik::cli {

struct Range {
  Rat first, last, step;
};

struct Request {
  std::string subcommand;
  std::string type;
  std::string chi;
  std::vector<Rat> k;  // as given: empty, one value or (k1, k2)
  int max_degree = 10;
  int degree = 0;
  bool symbolic = false;
  std::string format = "json";
  std::optional<Range> k1_range, k2_range;
  unsigned threads = 1;
  int max_q = 15;
  std::uint64_t seed = 0;
};

// Parses argv-style arguments (program name excluded). Throws parse_error
// on malformed values; CLI11 usage errors propagate as CLI::ParseError.
Request parse_request(const std::vector<std::string>& args);

// Runs a parsed request and writes the report to `out`.
void execute(const Request& req, std::ostream& out);

// parse_request + execute with exit-code mapping.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Grid values first, first + step, ... up to last inclusive.
std::vector<Rat> expand(const Range& r);
Range parse_range(const std::string& text);

}  // namespace cherednik::cli
