#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lce::cli {

namespace exit_code {
inline constexpr int ok = 0;           // decided, or certificate valid
inline constexpr int invalid = 1;      // certificate rejected
inline constexpr int usage = 2;
inline constexpr int parse = 3;        // malformed or inconsistent input file
inline constexpr int cap = 4;          // instance too large for the chosen algorithm
inline constexpr int rejected = 5;     // well-formed input outside an operation's domain
inline constexpr int internal = 6;
}  // namespace exit_code

/// Runs the `lce` command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lce::cli
