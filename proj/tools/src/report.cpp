#include "cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <tuple>

namespace pavstat::cli {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"symmetry", "unimodality", "parity", "signed",
                                              "cf",       "gf",          "dyck"};
  return names;
}

namespace {

std::size_t suite_rank(const std::string& suite) {
  const auto& names = suite_names();
  return static_cast<std::size_t>(std::find(names.begin(), names.end(), suite) - names.begin());
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "FAIL";
    case Outcome::note: return "note";
  }
  return "?";
}

std::string params(const CheckRecord& r) {
  std::string out;
  if (r.n >= 0) out += "n=" + std::to_string(r.n);
  if (r.k >= 0) out += (out.empty() ? "" : " ") + std::string("k=") + std::to_string(r.k);
  return out.empty() ? "-" : out;
}

}  // namespace

void Report::run(const std::string& suite, const std::string& label, int n, int k,
                 const std::function<CheckResult()>& check) {
  const auto start = std::chrono::steady_clock::now();
  CheckRecord r{suite, label, n, k, Outcome::pass, "", 0};
  try {
    const CheckResult result = check();
    r.outcome = result.ok ? Outcome::pass : Outcome::fail;
    r.detail = result.detail;
  } catch (const std::exception& e) {
    r.outcome = Outcome::fail;
    r.detail = std::string("exception: ") + e.what();
  }
  r.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  records_.push_back(std::move(r));
}

void Report::note(const std::string& suite, const std::string& label, int n, int k,
                  const std::string& detail) {
  records_.push_back({suite, label, n, k, Outcome::note, detail, 0});
}

void Report::add(CheckRecord record) { records_.push_back(std::move(record)); }

void Report::sort() {
  std::stable_sort(records_.begin(), records_.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     const auto ka = std::make_tuple(suite_rank(a.suite), a.n, a.k);
                     const auto kb = std::make_tuple(suite_rank(b.suite), b.n, b.k);
                     return ka < kb;
                   });
}

std::size_t Report::checks() const {
  return static_cast<std::size_t>(std::count_if(
      records_.begin(), records_.end(), [](const auto& r) { return r.outcome != Outcome::note; }));
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(
      records_.begin(), records_.end(), [](const auto& r) { return r.outcome == Outcome::fail; }));
}

std::size_t Report::notes() const {
  return static_cast<std::size_t>(std::count_if(
      records_.begin(), records_.end(), [](const auto& r) { return r.outcome == Outcome::note; }));
}

void Report::print(std::ostream& out, bool show_pass_details) const {
  char line[256];
  for (const auto& r : records_) {
    std::snprintf(line, sizeof line, "%-12s %-44s %-10s %-5s %10.2f ms", r.suite.c_str(),
                  r.label.c_str(), params(r).c_str(), outcome_name(r.outcome), r.millis);
    out << line << '\n';
    if (r.detail.empty()) continue;
    if (r.outcome == Outcome::pass && !show_pass_details) continue;
    std::istringstream lines(r.detail);
    for (std::string l; std::getline(lines, l);) out << "    " << l << '\n';
  }
  out << checks() << " checks, " << failures() << " failed, " << notes() << " notes\n";
}

nlohmann::json Report::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : records_) {
    nlohmann::json row{{"suite", r.suite},
                       {"label", r.label},
                       {"result", r.outcome == Outcome::pass   ? "pass"
                                  : r.outcome == Outcome::fail ? "fail"
                                                               : "note"},
                       {"millis", r.millis}};
    if (r.n >= 0) row["n"] = r.n;
    if (r.k >= 0) row["k"] = r.k;
    if (!r.detail.empty()) row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  return {{"checks", checks()}, {"failures", failures()}, {"records", rows}};
}

}  // namespace pavstat::cli
