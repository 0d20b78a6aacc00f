#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pavstat/poly.hpp"

namespace pavstat::cli {

/// Polynomial kinds accepted by `pavstat poly`.
enum class PolyKind { maj, inv, signed_inv, ank };

PolyKind parse_poly_kind(const std::string& name);
std::string kind_name(PolyKind kind);

struct PolyRequest {
  PolyKind kind = PolyKind::inv;
  int n = 0;
  std::optional<int> k;  // required for ank
};

/// Thrown when n exceeds the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int n, int cap);
  int cap() const noexcept { return cap_; }

 private:
  int cap_;
};

/// Canonical text of the requested polynomial. Throws CapExceeded or
/// std::invalid_argument.
std::string render_poly(const PolyRequest& request, int cap);

/// {"kind", "n", ["k"], "polynomial", "terms": [{"q", "t", "coeff"}...]}
/// with terms in the canonical order.
nlohmann::json poly_json(const PolyRequest& request, int cap);

/// Integer when it fits in 64 bits, decimal string otherwise.
nlohmann::json to_json_number(const BigInt& value);

}  // namespace pavstat::cli
