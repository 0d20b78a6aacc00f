#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pavstat/check.hpp"

namespace pavstat::cli {

/// Suite names in report order.
const std::vector<std::string>& suite_names();

enum class Outcome { pass, fail, note };

struct CheckRecord {
  std::string suite;
  std::string label;
  int n = -1;  // -1: not applicable
  int k = -1;
  Outcome outcome = Outcome::pass;
  std::string detail;
  double millis = 0;
};

class Report {
 public:
  /// Times `check`; an exception counts as a failure with its message.
  void run(const std::string& suite, const std::string& label, int n, int k,
           const std::function<CheckResult()>& check);
  /// Informational line, never a failure.
  void note(const std::string& suite, const std::string& label, int n, int k,
            const std::string& detail);
  void add(CheckRecord record);

  /// Stable sort by (suite, n, k).
  void sort();

  const std::vector<CheckRecord>& records() const noexcept { return records_; }
  std::size_t checks() const;
  std::size_t failures() const;
  std::size_t notes() const;
  bool ok() const { return failures() == 0; }

  /// One line per record; failure and note details follow, indented.
  void print(std::ostream& out, bool show_pass_details = false) const;
  nlohmann::json to_json() const;

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace pavstat::cli
