#pragma once

// Exact sparse polynomials over arbitrary-precision integers:
//   BivarPoly  - polynomials in (q, t), e.g. M_n(q,t) and I_n(q,t)
//   UnivarPoly - polynomials in a single tagged variable, e.g. A_{n,k}(q)
//   RatPoly    - dense polynomials in t over the rationals, the coefficient
//                ring for truncated power series that need division and sqrt
// plus the coefficient-shape predicates (symmetry, unimodality, log-concavity).

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pavstat {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exponent pair of q^q t^t.
struct Monomial {
  int q = 0;
  int t = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: ascending total degree, then ascending q-degree.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    const int da = a.q + a.t;
    const int db = b.q + b.t;
    if (da != db) return da < db;
    return a.q < b.q;
  }
};

enum class Var : char { q = 'q', t = 't' };

class UnivarPoly;

class BivarPoly {
 public:
  using Terms = std::map<Monomial, BigInt, CanonicalOrder>;

  BivarPoly() = default;
  BivarPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit BivarPoly(const BigInt& constant);

  static BivarPoly monomial(const BigInt& coeff, int q_exp, int t_exp);
  static BivarPoly q() { return monomial(1, 1, 0); }
  static BivarPoly t() { return monomial(1, 0, 1); }

  /// Adds coeff * q^q_exp t^t_exp; exponents must be nonnegative.
  void add_term(int q_exp, int t_exp, const BigInt& coeff);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term, zero if absent.
  BigInt constant_term() const { return coeff_of(0, 0); }
  BigInt coeff_of(int q_exp, int t_exp) const;
  int q_degree() const;  // -1 for the zero polynomial
  int t_degree() const;

  BigInt eval(const BigInt& q0, const BigInt& t0) const;

  /// [t^k] p as a polynomial in q.
  UnivarPoly coeff_t(int k) const;
  /// [q^k] p as a polynomial in t.
  UnivarPoly coeff_q(int k) const;
  /// p(q0, t) as a polynomial in t.
  UnivarPoly at_q(const BigInt& q0) const;
  /// p(q, t0) as a polynomial in q.
  UnivarPoly at_t(const BigInt& t0) const;
  /// p(q0, t0) kept as a (constant) BivarPoly.
  BivarPoly substituted(const BigInt& q0, const BigInt& t0) const;

  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  BivarPoly& operator*=(const BivarPoly& rhs);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// e.g. "t^2 + q*t", "1 - 2*q^3*t"; zero renders as "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

BivarPoly pow(const BivarPoly& base, int exponent);

class UnivarPoly {
 public:
  UnivarPoly() = default;
  explicit UnivarPoly(Var var) : var_(var) {}
  UnivarPoly(Var var, const BigInt& constant);
  UnivarPoly(Var var, const std::vector<BigInt>& dense);  // dense[i] = [x^i]

  static UnivarPoly monomial(Var var, const BigInt& coeff, int exp);

  Var var() const noexcept { return var_; }
  const std::map<int, BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  BigInt coeff(int exp) const;
  void add_term(int exp, const BigInt& coeff);
  int degree() const;      // -1 for zero
  int min_degree() const;  // -1 for zero
  std::size_t term_count() const noexcept { return coeffs_.size(); }

  /// Coefficients a_r, ..., a_s over the support window [r, s]; internal
  /// zeros are included, leading/trailing zeros are not.
  std::vector<BigInt> support_window() const;

  BigInt eval(const BigInt& x) const;

  UnivarPoly& operator+=(const UnivarPoly& rhs);
  UnivarPoly& operator-=(const UnivarPoly& rhs);
  UnivarPoly& operator*=(const UnivarPoly& rhs);
  friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
  friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
  friend UnivarPoly operator*(UnivarPoly a, const UnivarPoly& b) { return a *= b; }
  friend UnivarPoly operator-(const UnivarPoly& a);
  /// Equal as polynomials; variable tags are compared only when both sides
  /// are nonconstant.
  friend bool operator==(const UnivarPoly& a, const UnivarPoly& b);

  /// Ascending degree, e.g. "-t + t^2".
  std::string to_string() const;

 private:
  Var var_ = Var::t;
  std::map<int, BigInt> coeffs_;
};

/// a_i = a_{r+s-i} across the support [r, s]. The zero polynomial counts as
/// symmetric.
bool is_symmetric(const UnivarPoly& p);
/// a_r <= ... <= a_m >= ... >= a_s over the support window.
bool is_unimodal(const UnivarPoly& p);
/// a_i^2 >= a_{i-1} a_{i+1} for every interior index of the support window.
bool is_log_concave(const UnivarPoly& p);

bool is_unimodal(const std::vector<BigInt>& seq);
bool is_log_concave(const std::vector<BigInt>& seq);

/// Dense polynomial in t with rational coefficients; no trailing zeros.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit RatPoly(const Rational& constant);
  explicit RatPoly(std::vector<Rational> dense);
  explicit RatPoly(const UnivarPoly& p);

  static RatPoly t() { return RatPoly(std::vector<Rational>{0, 1}); }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int exp) const;
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_integral() const;
  /// Throws std::domain_error if some coefficient is not an integer.
  UnivarPoly to_integral(Var var = Var::t) const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator-(const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RatPoly pow(const RatPoly& base, int exponent);

/// Multiplicative inverse in the coefficient ring, if the element is a unit.
/// Used by truncated series division.
std::optional<BivarPoly> unit_inverse(const BivarPoly& c);
std::optional<RatPoly> unit_inverse(const RatPoly& c);

}  // namespace pavstat
