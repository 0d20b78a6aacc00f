#pragma once

#include <string>

#include "cli/report.hpp"

namespace pavstat::cli {

struct SuiteOptions {
  int max_n = 12;
};

/// Appends the checks of one suite (a name from suite_names(), or "all") to
/// `report`. Unknown names throw std::invalid_argument.
void run_suite(const std::string& name, const SuiteOptions& options, Report& report);

/// Largest n each suite visits for a given cap, where it differs from the cap.
inline constexpr int kOrbitMaxN = 9;
inline constexpr int kFixedPointMaxN = 9;
inline constexpr int kCfMaxOrder = 10;
inline constexpr int kDyckMaxN = 14;
inline constexpr int kContractionTrials = 20;

}  // namespace pavstat::cli
