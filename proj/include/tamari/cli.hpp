#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tamari {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Environment variable overriding the default size bound.
inline constexpr const char* kMaxSizeEnv = "TAMARI_MAX_SIZE";

// Runs the tool on `args` (without the program name). Input documents are
// read from `in` one JSON value per line unless --input is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace tamari
