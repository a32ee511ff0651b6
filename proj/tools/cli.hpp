#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sheetlint::cli {

// Exit codes shared by every command.
inline constexpr int kExitClean = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitLoadError = 2;

// Runs one command line (args excludes the program name). Report output goes
// to out unless --output is given; errors go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Lowercase hex SHA-256 of bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace sheetlint::cli
