#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monosimplex::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kBudgetExhausted = 3;
inline constexpr int kVerificationFailed = 4;

// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monosimplex::cli
