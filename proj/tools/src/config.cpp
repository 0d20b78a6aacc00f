#include "cli/config.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pavstat/permutation.hpp"

namespace pavstat::cli {

namespace {

int checked(int value, const std::string& source) {
  if (value < 0 || value > kMaxEnumerationLength) {
    throw std::invalid_argument(source + " must lie in [0, " +
                                std::to_string(kMaxEnumerationLength) + "], got " +
                                std::to_string(value));
  }
  return value;
}

}  // namespace

int resolve_max_n(std::optional<int> flag, bool extended, const char* env_value) {
  if (flag) return checked(*flag, "--max-n");
  if (env_value != nullptr && *env_value != '\0') {
    const std::string_view text(env_value);
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
      throw std::invalid_argument(std::string(kMaxNEnv) + " is not an integer: '" +
                                  std::string(text) + "'");
    }
    return checked(value, kMaxNEnv);
  }
  return extended ? kExtendedMaxN : kDefaultMaxN;
}

int resolve_max_n(std::optional<int> flag, bool extended) {
  return resolve_max_n(flag, extended, std::getenv(kMaxNEnv));
}

}  // namespace pavstat::cli
