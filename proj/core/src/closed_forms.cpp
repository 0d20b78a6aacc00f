#include "pavstat/closed_forms.hpp"

#include <mutex>
#include <stdexcept>

#include "pavstat/statpoly.hpp"

namespace pavstat {

namespace {

constexpr int kBruteForceLimit = 13;

UnivarPoly oracle_signed(int n) {
  return n <= kBruteForceLimit ? signed_inv_poly(n) : inv_poly_transfer(n).at_q(-1);
}

UnivarPoly t_poly(std::initializer_list<long> dense) {
  std::vector<BigInt> c;
  for (long x : dense) c.emplace_back(x);
  return UnivarPoly(Var::t, c);
}

RatPoly rat(std::initializer_list<long> dense) {
  std::vector<Rational> c;
  for (long x : dense) c.emplace_back(x);
  return RatPoly(std::move(c));
}

// Polynomial in z with coefficients in Q[t] as a truncated series.
ZSeries zpoly(std::vector<RatPoly> coeffs, int order) {
  return ZSeries(std::move(coeffs), order);
}

std::string mismatch(const std::string& what, const std::string& lhs, const std::string& rhs) {
  return what + "\n  lhs: " + lhs + "\n  rhs: " + rhs;
}

CheckResult series_vanishes(const std::string& what, const ZSeries& s, int order) {
  for (int n = 0; n <= order; ++n) {
    if (!s[n].is_zero()) {
      return CheckResult::fail(what + ": [z^" + std::to_string(n) +
                               "] = " + s[n].to_string() + " is not zero");
    }
  }
  return CheckResult::pass(what + " vanishes through z^" + std::to_string(order));
}

}  // namespace

// --------------------------------------------------------------- binomials

BinomialTable::BinomialTable(int max_n) {
  if (max_n < 0) throw std::invalid_argument("BinomialTable: max_n must be nonnegative");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n) + 1);
    row.front() = row.back() = 1;
    for (int k = 1; k < n; ++k) {
      const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
      row[static_cast<std::size_t>(k)] =
          prev[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(k)];
    }
  }
}

BigInt BinomialTable::operator()(int n, int k) const {
  if (n < 0 || n > max_n()) throw std::out_of_range("BinomialTable: n outside table");
  if (k < 0 || k > n) return 0;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be nonnegative");
  static std::mutex mutex;
  static std::vector<BigInt> cache{BigInt(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    const auto m = cache.size();
    BigInt next = 0;
    for (std::size_t i = 0; i < m; ++i) next += cache[i] * cache[m - 1 - i];
    cache.push_back(next);
  }
  return cache[static_cast<std::size_t>(n)];
}

BigInt narayana(int n, int k) {
  if (k < 1 || n < k) return 0;
  BigInt product = binomial(n, k) * binomial(n, k - 1);
  BigInt out;
  mpz_divexact_ui(out.get_mpz_t(), product.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

UnivarPoly narayana_poly(int n) {
  if (n == 0) return UnivarPoly(Var::t, BigInt(1));
  UnivarPoly out(Var::t);
  for (int k = 1; k <= n; ++k) out.add_term(k, narayana(n, k));
  return out;
}

BigInt s_coeff(int n, int k) {
  if (k < 1 || n < k) return 0;
  // floor((m)/2) and ceil((m)/2) for m >= 0
  const auto lo = [](int m) { return m / 2; };
  const auto hi = [](int m) { return (m + 1) / 2; };
  return binomial(lo(n - 1), lo(k - 1)) * binomial(hi(n - 1), hi(k - 1));
}

UnivarPoly sign_enum_poly(int n) {
  if (n < 0) throw std::invalid_argument("sign_enum_poly: n must be nonnegative");
  if (n == 0) return UnivarPoly(Var::t, BigInt(1));
  UnivarPoly out(Var::t);
  for (int k = 1; k <= n; ++k) {
    const BigInt s = s_coeff(n, k);
    out.add_term(k, (n - k) % 2 == 0 ? s : BigInt(-s));
  }
  return out;
}

// ------------------------------------------------------ polynomial checks

CheckResult verify_sign_enumeration(int n) {
  const UnivarPoly oracle = oracle_signed(n);
  const UnivarPoly formula = sign_enum_poly(n);
  const std::string what = "I_" + std::to_string(n) + "(-1,t)";
  if (oracle == formula) return CheckResult::pass(what + " = " + formula.to_string());
  return CheckResult::fail(mismatch(what, oracle.to_string(), formula.to_string()));
}

CheckResult verify_rec1(int n) {
  if (n < 1) throw std::invalid_argument("verify_rec1: n must be at least 1");
  const UnivarPoly lhs = oracle_signed(2 * n);
  const UnivarPoly rhs = t_poly({-1, 1}) * oracle_signed(2 * n - 1);
  const std::string what = "I_" + std::to_string(2 * n) + "(-1,t) = (t-1) I_" +
                           std::to_string(2 * n - 1) + "(-1,t)";
  if (lhs == rhs) return CheckResult::pass(what);
  return CheckResult::fail(mismatch(what, lhs.to_string(), rhs.to_string()));
}

CheckResult verify_rec2(int n) {
  if (n < 2) throw std::invalid_argument("verify_rec2: n must be at least 2");
  const long m = n;
  const UnivarPoly lhs = UnivarPoly(Var::t, BigInt(m + 1)) * oracle_signed(2 * n + 1);
  const UnivarPoly first = t_poly({2 * m, -2, 2 * m}) * oracle_signed(2 * n - 1);
  const UnivarPoly one_minus_t2_sq = t_poly({1, 0, -2, 0, 1});
  const UnivarPoly second =
      one_minus_t2_sq * UnivarPoly(Var::t, BigInt(m - 1)) * oracle_signed(2 * n - 3);
  const UnivarPoly rhs = first - second;
  const std::string what = "three-term recurrence at n=" + std::to_string(n);
  if (lhs == rhs) return CheckResult::pass(what);
  return CheckResult::fail(mismatch(what, lhs.to_string(), rhs.to_string()));
}

CheckResult verify_simion_schmidt(int n) {
  if (n < 1) throw std::invalid_argument("verify_simion_schmidt: n must be at least 1");
  const BigInt even = oracle_signed(2 * n).eval(1);
  const BigInt odd = oracle_signed(2 * n + 1).eval(1);
  const std::string what = "I_" + std::to_string(2 * n) + "(-1,1) = " + even.get_str() +
                           ", I_" + std::to_string(2 * n + 1) + "(-1,1) = " + odd.get_str() +
                           ", C_" + std::to_string(n) + " = " + catalan(n).get_str();
  if (even == 0 && odd == catalan(n)) return CheckResult::pass(what);
  return CheckResult::fail(what);
}

CheckResult verify_narayana(int n) {
  const UnivarPoly oracle = inv_poly(n).at_q(1);
  const UnivarPoly formula = narayana_poly(n);
  const std::string what = "I_" + std::to_string(n) + "(1,t)";
  if (oracle == formula) return CheckResult::pass(what + " = " + formula.to_string());
  return CheckResult::fail(mismatch(what, oracle.to_string(), formula.to_string()));
}

// -------------------------------------------------- generating functions

ZSeries gf_sign(int order) {
  if (order < 0) throw std::invalid_argument("gf_sign: order must be nonnegative");
  const int work = order + 1;  // one order is consumed by the division by z
  const RatPoly one_minus_t2 = rat({1, 0, -1});
  const ZSeries radicand =
      zpoly({rat({1}), RatPoly(), rat({-2, 0, -2}), RatPoly(), one_minus_t2 * one_minus_t2}, work);
  const ZSeries numerator = zpoly({rat({1}), rat({2}), one_minus_t2}, work) - sqrt(radicand);
  const ZSeries denominator = zpoly({rat({2}), rat({2, -2})}, order);
  return numerator.divided_by_z() / denominator;
}

ZSeries gf_sign_odd(int order) {
  if (order < 0) throw std::invalid_argument("gf_sign_odd: order must be nonnegative");
  const int work = order + 1;
  const RatPoly one_minus_t_sq = rat({1, -2, 1});
  const RatPoly one_minus_t2 = rat({1, 0, -1});
  const ZSeries radicand =
      zpoly({rat({1}), rat({-2, 0, -2}), one_minus_t2 * one_minus_t2}, work);
  const ZSeries numerator = zpoly({rat({1}), -one_minus_t_sq}, work) - sqrt(radicand);
  const ZSeries denominator = zpoly({rat({2}), one_minus_t_sq * Rational(-2)}, order);
  return numerator.divided_by_z() / denominator;
}

CheckResult verify_gf_sign(int order) {
  const auto coeffs = integral_coefficients(gf_sign(order));
  for (int n = 0; n <= order; ++n) {
    const UnivarPoly oracle = oracle_signed(n);
    if (!(coeffs[static_cast<std::size_t>(n)] == oracle)) {
      return CheckResult::fail(mismatch("[z^" + std::to_string(n) + "] of the closed form",
                                        coeffs[static_cast<std::size_t>(n)].to_string(),
                                        oracle.to_string()));
    }
  }
  return CheckResult::pass("closed form matches I_n(-1,t) for n <= " + std::to_string(order));
}

CheckResult verify_gf_sign_odd(int order) {
  const auto coeffs = integral_coefficients(gf_sign_odd(order));
  for (int n = 0; n <= order; ++n) {
    const UnivarPoly oracle = oracle_signed(2 * n + 1);
    if (!(coeffs[static_cast<std::size_t>(n)] == oracle)) {
      return CheckResult::fail(mismatch("[z^" + std::to_string(n) + "] of the odd closed form",
                                        coeffs[static_cast<std::size_t>(n)].to_string(),
                                        oracle.to_string()));
    }
  }
  return CheckResult::pass("odd closed form matches I_{2n+1}(-1,t) for n <= " +
                           std::to_string(order));
}

CheckResult verify_functional_equation(int order) {
  if (order < 0) throw std::invalid_argument("verify_functional_equation: negative order");
  const ZSeries f = to_zseries(signed_inv_polys(order, kBruteForceLimit));
  const ZSeries a = zpoly({rat({1}), rat({1, -1})}, order);
  const ZSeries b = zpoly({rat({1}), rat({2}), rat({1, 0, -1})}, order);
  const ZSeries c = zpoly({rat({1}), rat({1, 1})}, order);
  const ZSeries lhs = a * (f * f).shifted(1) - b * f + c;
  return series_vanishes("functional equation", lhs, order);
}

CheckResult verify_reflection_identity(int order) {
  if (order < 0) throw std::invalid_argument("verify_reflection_identity: negative order");
  const ZSeries f = to_zseries(signed_inv_polys(order, kBruteForceLimit));
  const ZSeries a = zpoly({rat({1}), rat({1, -1})}, order);
  const ZSeries b = zpoly({rat({1}), rat({-1, 1})}, order);
  const ZSeries lhs = a * f + b * negate_z(f) - ZSeries::constant(rat({2}), order);
  return series_vanishes("reflection identity", lhs, order);
}

CheckResult verify_ode(int order) {
  if (order < 1) throw std::invalid_argument("verify_ode: order must be at least 1");
  const auto all = signed_inv_polys(2 * order + 1, kBruteForceLimit);
  std::vector<UnivarPoly> odd;
  for (int n = 0; n <= order; ++n) odd.push_back(all[static_cast<std::size_t>(2 * n + 1)]);
  const ZSeries g = to_zseries(odd);
  const RatPoly one_minus_t2 = rat({1, 0, -1});
  const ZSeries p = zpoly({rat({1}), rat({-2, 0, -2}), one_minus_t2 * one_minus_t2}, order);
  const ZSeries r = zpoly({rat({1}), rat({-2, 2, -2}), one_minus_t2 * one_minus_t2}, order);
  const ZSeries lhs =
      (p * derivative(g)).shifted(1) + r * g - ZSeries::constant(RatPoly::t(), order);
  return series_vanishes("differential equation", lhs, order);
}

UnivarPoly lagrange_series_side(int n) {
  if (n < 0) throw std::invalid_argument("lagrange_series_side: n must be nonnegative");
  const int order = std::max(n, 1);
  const ZSeries radicand = zpoly({rat({1}), rat({-2, -2}), rat({1, -2, 1})}, order);
  return reciprocal(sqrt(radicand))[n].to_integral(Var::t);
}

UnivarPoly lagrange_power_side(int n) {
  if (n < 0) throw std::invalid_argument("lagrange_power_side: n must be nonnegative");
  // Choose `a` factors contributing (1+t)x and `b` contributing t x^2 with
  // a + 2b = n; the rest contribute 1.
  UnivarPoly out(Var::t);
  const UnivarPoly one_plus_t = t_poly({1, 1});
  for (int b = 0; 2 * b <= n; ++b) {
    const int a = n - 2 * b;
    const BigInt ways = binomial(n, b) * binomial(n - b, a);
    UnivarPoly term = UnivarPoly::monomial(Var::t, ways, b);
    for (int i = 0; i < a; ++i) term *= one_plus_t;
    out += term;
  }
  return out;
}

CheckResult verify_lagrange(int n) {
  const UnivarPoly lhs = lagrange_series_side(n);
  const UnivarPoly rhs = lagrange_power_side(n);
  const std::string what = "coefficient identity at n=" + std::to_string(n);
  if (lhs == rhs) return CheckResult::pass(what + ": " + lhs.to_string());
  return CheckResult::fail(mismatch(what, lhs.to_string(), rhs.to_string()));
}

std::pair<BigInt, BigInt> coeff_formulas(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("coeff_formulas: negative argument");
  const BigInt c = binomial(n, k);
  return {c * c, -binomial(n, k - 1) * c};
}

CheckResult verify_coeff_formulas(int n) {
  const UnivarPoly oracle = oracle_signed(2 * n + 1);
  UnivarPoly predicted(Var::t);
  for (int k = 0; k <= n + 1; ++k) {
    const auto [odd, even] = coeff_formulas(n, k);
    predicted.add_term(2 * k + 1, odd);
    predicted.add_term(2 * k, even);
  }
  const std::string what = "coefficients of I_" + std::to_string(2 * n + 1) + "(-1,t)";
  if (oracle == predicted) return CheckResult::pass(what);
  return CheckResult::fail(mismatch(what, oracle.to_string(), predicted.to_string()));
}

}  // namespace pavstat
