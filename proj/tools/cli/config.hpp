#pragma once

#include <optional>

namespace pavstat::cli {

inline constexpr int kDefaultMaxN = 12;
inline constexpr int kExtendedMaxN = 15;
inline constexpr const char* kMaxNEnv = "PAVSTAT_MAX_N";

/// Cap on n: the --max-n flag, else PAVSTAT_MAX_N, else 12 (15 with
/// --extended). `env_value` is the raw environment string or nullptr.
/// Throws std::invalid_argument for a malformed or out-of-range value.
int resolve_max_n(std::optional<int> flag, bool extended, const char* env_value);

/// Same, reading the environment.
int resolve_max_n(std::optional<int> flag, bool extended);

}  // namespace pavstat::cli
