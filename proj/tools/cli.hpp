#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace diamondplot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

inline constexpr unsigned long long kDefaultSeed = 42;
inline constexpr const char* kSeedEnvVar = "DIAMONDPLOT_SEED";

/// Runs one invocation. `args` excludes the program name. Machine-readable
/// output (SVG or JSON without --out, stats JSON) goes to `out`; messages to
/// `err`. Returns 0 on success, 1 for usage errors, 2 for data errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace diamondplot::cli
