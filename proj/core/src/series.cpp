#include "pavstat/series.hpp"

namespace pavstat {

std::vector<UnivarPoly> integral_coefficients(const ZSeries& s) {
  std::vector<UnivarPoly> out;
  out.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n) {
    if (!s[n].is_integral()) {
      throw std::domain_error("integral_coefficients: [z^" + std::to_string(n) +
                              "] = " + s[n].to_string() + " is not integral");
    }
    out.push_back(s[n].to_integral(Var::t));
  }
  return out;
}

ZSeries to_zseries(const std::vector<UnivarPoly>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("to_zseries: no coefficients");
  std::vector<RatPoly> out;
  out.reserve(coeffs.size());
  for (const auto& p : coeffs) out.emplace_back(p);
  return ZSeries(std::move(out), static_cast<int>(coeffs.size()) - 1);
}

}  // namespace pavstat
