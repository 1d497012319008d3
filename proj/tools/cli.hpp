#ifndef TABALG_TOOLS_CLI_HPP
#define TABALG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tabalg::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

/// Runs one invocation. args excludes the program name; `-` as a file
/// argument reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a64(const std::string& bytes);

}  // namespace tabalg::cli

#endif  // TABALG_TOOLS_CLI_HPP
