#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pebbling/grid.hpp"
#include "pebbling/numeric.hpp"

namespace pebbling::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kBudget = 2 };

/// Runs one command line (without the program name). The payload is written
/// to `out` only once it is complete; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "5x5x3" -> {5, 5, 3}
std::vector<int> parse_shape(const std::string& text);
/// "2,3" -> {2, 3}
std::vector<long long> parse_int_list(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace pebbling::cli
