#pragma once

#include <string>
#include <utility>

namespace pavstat {

/// Outcome of one verification. `detail` carries both sides in full when the
/// check fails, and a short summary otherwise.
struct CheckResult {
  bool ok = false;
  std::string detail;

  static CheckResult pass(std::string detail = {}) { return {true, std::move(detail)}; }
  static CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

  explicit operator bool() const noexcept { return ok; }
};

}  // namespace pavstat
