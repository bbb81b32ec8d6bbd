#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dsort/errors.hpp"

namespace dsort::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kBoundExceeded = 3;
inline constexpr int kSelftestFailed = 4;

inline constexpr const char* kSeedEnvVar = "DSORT_SEED";

class ParseError : public Error {
 public:
  using Error::Error;
};

// A numeric sequence as typed, keeping each token's text for echoing.
struct ParsedSequence {
  std::vector<std::string> tokens;
  bool integral = true;
  std::vector<long long> integers;
  std::vector<double> reals;
};

// Splits on commas and whitespace. Throws ParseError naming the token and its
// 1-based position.
ParsedSequence parse_sequence(const std::string& text);

// "5", "2:10" (inclusive) or comma lists of either, e.g. "5,10,20:25".
std::vector<std::size_t> parse_n_range(const std::string& text);

// Shortest round-trip decimal, always with a fractional part ("1.0").
std::string format_real(double x);

// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dsort::cli
