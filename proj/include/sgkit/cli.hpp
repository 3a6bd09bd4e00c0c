#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a self-check disagreed
inline constexpr int kExitUsage = 2;    // bad arguments or unparsable input
inline constexpr int kExitResource = 3; // a search budget or size limit was hit

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgkit
