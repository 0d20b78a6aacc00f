#pragma once

// Explicit numbers, recurrences, and generating-function identities for the
// signed inversion enumeration of Av_n(321), each paired with a checker that
// compares full polynomial objects against the brute-force oracle.

#include <utility>
#include <vector>

#include "pavstat/check.hpp"
#include "pavstat/poly.hpp"
#include "pavstat/series.hpp"

namespace pavstat {

/// Pascal-triangle cache of binomial coefficients C(n, k), 0 <= n <= max_n.
/// Out-of-range k (k < 0 or k > n) gives 0.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n);

  int max_n() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  BigInt operator()(int n, int k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// C(n, k) with C(n, k) = 0 for k < 0, k > n, or n < 0.
BigInt binomial(int n, int k);

/// Catalan numbers from Segner's recurrence C_{m+1} = sum_i C_i C_{m-i}.
BigInt catalan(int n);

/// N_{n,k} = C(n,k) C(n,k-1) / n for n >= k >= 1; 0 otherwise.
BigInt narayana(int n, int k);
/// sum_k N_{n,k} t^k (the constant 1 for n = 0).
UnivarPoly narayana_poly(int n);

/// s_{n,k} = C(floor((n-1)/2), floor((k-1)/2)) * C(ceil((n-1)/2), ceil((k-1)/2))
/// for n >= k >= 1; 0 otherwise.
BigInt s_coeff(int n, int k);

/// sum_{k=1}^n (-1)^{n-k} s_{n,k} t^k; the constant 1 for n = 0.
UnivarPoly sign_enum_poly(int n);

/// I_n(-1,t) equals sign_enum_poly(n).
CheckResult verify_sign_enumeration(int n);

/// I_{2n}(-1,t) = (t - 1) I_{2n-1}(-1,t), n >= 1.
CheckResult verify_rec1(int n);

/// (n+1) I_{2n+1}(-1,t) = 2((1+t^2)n - t) I_{2n-1}(-1,t)
///                        - (1-t^2)^2 (n-1) I_{2n-3}(-1,t),  n >= 2.
CheckResult verify_rec2(int n);

/// I_{2n}(-1,1) = 0 and I_{2n+1}(-1,1) = C_n, n >= 1.
CheckResult verify_simion_schmidt(int n);

/// I_n(1,t) is the n-th Narayana polynomial.
CheckResult verify_narayana(int n);

/// (1+2z+(1-t^2)z^2 - sqrt(1-2(1+t^2)z^2+(1-t^2)^2 z^4)) / (2z(1+z-tz)),
/// through z^order, by exact series arithmetic.
ZSeries gf_sign(int order);

/// (1-(1-t)^2 z - sqrt(1-2(1+t^2)z+(1-t^2)^2 z^2)) / (2z(1-(1-t)^2 z)).
ZSeries gf_sign_odd(int order);

/// gf_sign coefficients are integral and equal I_n(-1,t), n <= order.
CheckResult verify_gf_sign(int order);
/// gf_sign_odd coefficients are integral and equal I_{2n+1}(-1,t), n <= order.
CheckResult verify_gf_sign_odd(int order);

/// (1+z-tz) z F^2 - (1+2z+z^2-t^2 z^2) F + (1+z+tz) vanishes through z^order
/// for F = sum_n I_n(-1,t) z^n.
CheckResult verify_functional_equation(int order);

/// (1+z-tz) F(z) + (1-z+tz) F(-z) = 2 through z^order.
CheckResult verify_reflection_identity(int order);

/// z(1-2(1+t^2)z+(1-t^2)^2 z^2) G' + (1-2(1-t+t^2)z+(1-t^2)^2 z^2) G - t
/// vanishes through z^order for G = sum_n I_{2n+1}(-1,t) z^n.
CheckResult verify_ode(int order);

/// [z^n] 1/sqrt(1 - 2(1+t)z + (1-t)^2 z^2), by series sqrt and reciprocal.
UnivarPoly lagrange_series_side(int n);
/// [x^n] (1 + (1+t)x + t x^2)^n, by multinomial expansion.
UnivarPoly lagrange_power_side(int n);
CheckResult verify_lagrange(int n);

/// Predicted ([t^{2k+1}] I_{2n+1}(-1,t), [t^{2k}] I_{2n+1}(-1,t)) =
/// (C(n,k)^2, -C(n,k-1) C(n,k)).
std::pair<BigInt, BigInt> coeff_formulas(int n, int k);
/// Every coefficient of I_{2n+1}(-1,t) matches coeff_formulas.
CheckResult verify_coeff_formulas(int n);

}  // namespace pavstat
