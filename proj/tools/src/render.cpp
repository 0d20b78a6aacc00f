#include "cli/render.hpp"

#include <stdexcept>

#include "pavstat/statpoly.hpp"

namespace pavstat::cli {

PolyKind parse_poly_kind(const std::string& name) {
  if (name == "maj") return PolyKind::maj;
  if (name == "inv") return PolyKind::inv;
  if (name == "signed") return PolyKind::signed_inv;
  if (name == "ank") return PolyKind::ank;
  throw std::invalid_argument("unknown polynomial kind '" + name + "'");
}

std::string kind_name(PolyKind kind) {
  switch (kind) {
    case PolyKind::maj: return "maj";
    case PolyKind::inv: return "inv";
    case PolyKind::signed_inv: return "signed";
    case PolyKind::ank: return "ank";
  }
  return "?";
}

CapExceeded::CapExceeded(int n, int cap)
    : std::runtime_error("refusing n = " + std::to_string(n) + ": exceeds the cap of " +
                         std::to_string(cap) + " (raise it with --max-n or PAVSTAT_MAX_N)"),
      cap_(cap) {}

namespace {

void check_request(const PolyRequest& r, int cap) {
  if (r.n < 0) throw std::invalid_argument("n must be nonnegative");
  if (r.n > cap) throw CapExceeded(r.n, cap);
  if (r.kind == PolyKind::ank) {
    if (!r.k) throw std::invalid_argument("ank needs k");
    if (*r.k < 0) throw std::invalid_argument("k must be nonnegative");
  }
}

}  // namespace

std::string render_poly(const PolyRequest& r, int cap) {
  check_request(r, cap);
  switch (r.kind) {
    case PolyKind::maj: return maj_poly(r.n).to_string();
    case PolyKind::inv: return inv_poly(r.n).to_string();
    case PolyKind::signed_inv: return signed_inv_poly(r.n).to_string();
    case PolyKind::ank: return a_poly(r.n, *r.k).to_string();
  }
  return {};
}

nlohmann::json to_json_number(const BigInt& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

nlohmann::json poly_json(const PolyRequest& r, int cap) {
  check_request(r, cap);
  nlohmann::json out{{"kind", kind_name(r.kind)}, {"n", r.n}};
  if (r.kind == PolyKind::ank) out["k"] = *r.k;
  nlohmann::json terms = nlohmann::json::array();
  if (r.kind == PolyKind::maj || r.kind == PolyKind::inv) {
    const BivarPoly p = r.kind == PolyKind::maj ? maj_poly(r.n) : inv_poly(r.n);
    out["polynomial"] = p.to_string();
    for (const auto& [m, c] : p.terms()) {
      terms.push_back({{"q", m.q}, {"t", m.t}, {"coeff", to_json_number(c)}});
    }
  } else {
    const UnivarPoly p = r.kind == PolyKind::ank ? a_poly(r.n, *r.k) : signed_inv_poly(r.n);
    const char* var = p.var() == Var::q ? "q" : "t";
    out["polynomial"] = p.to_string();
    for (const auto& [e, c] : p.coeffs()) {
      terms.push_back({{var, e}, {"coeff", to_json_number(c)}});
    }
  }
  out["terms"] = std::move(terms);
  return out;
}

}  // namespace pavstat::cli
