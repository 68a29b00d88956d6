#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ruled::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;          // bad flags, validation, malformed JSON
inline constexpr int kCounterexample = 2; // sw-check / sw-search found a violation
inline constexpr int kInternal = 3;       // internal-consistency failure

// args excludes the program name.  `in` is read when --input is "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ruled::cli
