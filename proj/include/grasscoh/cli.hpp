#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "grasscoh/bott.hpp"

namespace grasscoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses "a..b" or "N" (meaning -N..N). std::nullopt on malformed input.
std::optional<TwistWindow> parse_window(const std::string& text);

/// The default twist window, overridden by GRASSCOH_WINDOW when set.
TwistWindow default_window();

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grasscoh::cli
