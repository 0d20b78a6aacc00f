#pragma once

// Generalized continued fractions whose partial numerators and denominators
// are polynomials in (q, t, z):
//
//   lead + s_1 a_1 / (b_1 + s_2 a_2 / (b_2 + s_3 a_3 / (b_3 + ...)))
//
// with signs s_i in {+, -}. Expansion produces a truncated power series in z;
// the Jones-Thron contractions produce the even and odd parts.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pavstat/poly.hpp"
#include "pavstat/series.hpp"

namespace pavstat {

/// Polynomial in z with coefficients in Z[q, t]; coeffs()[i] = [z^i].
class ZPolynomial {
 public:
  ZPolynomial() = default;
  ZPolynomial(long constant);              // NOLINT(google-explicit-constructor)
  ZPolynomial(const BivarPoly& constant);  // NOLINT(google-explicit-constructor)

  static ZPolynomial term(const BivarPoly& coeff, int z_power);

  const std::vector<BivarPoly>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int z_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Smallest power of z with a nonzero coefficient, -1 for zero.
  int z_valuation() const;

  QTSeries to_series(int order) const;
  ZPolynomial substituted(const BigInt& q0, const BigInt& t0) const;

  ZPolynomial& operator+=(const ZPolynomial& rhs);
  ZPolynomial& operator-=(const ZPolynomial& rhs);
  friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
  friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }
  friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
  friend ZPolynomial operator-(const ZPolynomial& a);
  friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BivarPoly> coeffs_;
};

enum class Sign { plus, minus };

struct CFLevel {
  Sign sign = Sign::plus;
  ZPolynomial numerator;
  ZPolynomial denominator = ZPolynomial(1);

  friend bool operator==(const CFLevel&, const CFLevel&) = default;
};

struct CFSpec {
  ZPolynomial lead;
  std::vector<CFLevel> levels;

  int depth() const noexcept { return static_cast<int>(levels.size()); }

  /// The finite continued fraction made of the first `depth` levels.
  CFSpec prefix(int depth) const;

  /// Same value with every sign set to plus and the numerators negated
  /// where the sign was minus.
  CFSpec normalized() const;

  /// Evaluates every q and t at the given integers.
  CFSpec substituted(const BigInt& q0, const BigInt& t0) const;

  friend bool operator==(const CFSpec&, const CFSpec&) = default;
};

/// Raised when a finite prefix cannot certify the requested order.
class InsufficientDepth : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default prefix depth used for a target order: each level of the
/// continued fractions built here carries at least one factor of z.
constexpr int default_depth(int order) { return order + 2; }

/// Bottom-up exact evaluation of the finite continued fraction, truncated
/// at z^order. No stability check.
QTSeries evaluate(const CFSpec& cf, int order);

/// evaluate() with a depth-stability guard: the prefixes of depth d and d-1
/// must agree through z^order, otherwise InsufficientDepth. Division by a
/// series whose constant term is not a unit raises std::domain_error.
QTSeries expand(const CFSpec& cf, int order);

/// 1/(1 - z/(1 - z/(1 - ...))) with `depth` levels: the Catalan series.
CFSpec catalan_cf(int depth);

/// 1/(1 - tz/(1 - qz/(1 - tqz/(1 - q^2 z/(1 - tq^2 z/(1 - ...)))))),
/// the continued fraction of sum_n I_n(q,t) z^n, with `depth` levels.
CFSpec sti_cf(int depth);

/// Jones-Thron even part of a_1/(1 + a_2/(1 + a_3/(1 + ...))):
///   a_1/(1 + a_2 - a_2 a_3/(1 + a_3 + a_4 - a_4 a_5/(1 + a_5 + a_6 - ...)))
/// Input must have zero lead and unit denominators (signs are normalized
/// first); std::invalid_argument otherwise, InsufficientDepth below depth 2.
CFSpec even_part(const CFSpec& cf);

/// Jones-Thron odd part:
///   a_1 - a_1 a_2/(1 + a_2 + a_3 - a_3 a_4/(1 + a_4 + a_5 - ...))
/// Same preconditions; needs depth at least 3.
CFSpec odd_part(const CFSpec& cf);

/// Continued fraction with `depth` levels of random signed monomial
/// numerators c q^a t^b z^d (|c| <= 3, a, b <= 2, unit denominators). The
/// first numerator has d in {0, 1}, all later ones d in {1, 2}. Deterministic
/// in `seed`; used for randomized contraction checks.
CFSpec random_monomial_cf(std::uint64_t seed, int depth);

}  // namespace pavstat
