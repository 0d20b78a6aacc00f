#pragma once

// Truncated formal power series in z over an exact coefficient ring.
//
// A Series<R> of order N knows the coefficients of z^0 .. z^N and nothing
// beyond. Every operation propagates validity: the result order is the
// smallest order that the operands can justify, so a computation never
// claims a coefficient it could not have determined.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pavstat/poly.hpp"

namespace pavstat {

template <class R>
class Series {
 public:
  /// The zero series valid through z^order.
  explicit Series(int order) : coeffs_(checked_size(order)) {}

  /// Coefficients beyond `order` are dropped; missing ones are zero.
  Series(std::vector<R> coeffs, int order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_size(order));
  }

  static Series constant(const R& c, int order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c * z^power truncated to `order`.
  static Series monomial(const R& c, int power, int order) {
    Series s(order);
    if (power >= 0 && power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const R& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  R& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<R>& coeffs() const noexcept { return coeffs_; }

  Series truncated(int order) const {
    if (order > this->order()) {
      throw std::invalid_argument("Series::truncated: cannot extend validity");
    }
    return Series(coeffs_, order);
  }

  /// z^k * s, valid through order + k.
  Series shifted(int k) const {
    if (k < 0) throw std::invalid_argument("Series::shifted: negative shift");
    std::vector<R> out(static_cast<std::size_t>(k), R{});
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Series(std::move(out), order() + k);
  }

  /// s / z; the constant term must vanish exactly.
  Series divided_by_z() const {
    if (!is_zero_coeff(coeffs_[0])) {
      throw std::domain_error("Series::divided_by_z: constant term is not zero");
    }
    if (order() < 1) throw std::domain_error("Series::divided_by_z: order too small");
    return Series(std::vector<R>(coeffs_.begin() + 1, coeffs_.end()), order() - 1);
  }

  /// True iff the coefficients of z^0..z^upto coincide.
  bool agrees_with(const Series& other, int upto) const {
    if (upto > order() || upto > other.order()) return false;
    for (int n = 0; n <= upto; ++n) {
      if (!((*this)[n] == other[n])) return false;
    }
    return true;
  }

  /// True iff the coefficients of z^0..z^upto are all zero.
  bool vanishes_to(int upto) const {
    if (upto > order()) return false;
    for (int n = 0; n <= upto; ++n) {
      if (!is_zero_coeff((*this)[n])) return false;
    }
    return true;
  }

  Series& operator+=(const Series& rhs) {
    coeffs_.resize(static_cast<std::size_t>(std::min(order(), rhs.order()) + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  Series& operator-=(const Series& rhs) {
    coeffs_.resize(static_cast<std::size_t>(std::min(order(), rhs.order()) + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(const Series& a) {
    Series out(a.order());
    for (int n = 0; n <= a.order(); ++n) out[n] = -a[n];
    return out;
  }

  friend Series operator*(const Series& a, const Series& b) {
    const int order = std::min(a.order(), b.order());
    Series out(order);
    for (int i = 0; i <= order; ++i) {
      if (is_zero_coeff(a[i])) continue;
      for (int j = 0; i + j <= order; ++j) {
        if (is_zero_coeff(b[j])) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }

  friend Series operator*(const Series& a, const R& c) {
    Series out(a.order());
    for (int n = 0; n <= a.order(); ++n) out[n] = a[n] * c;
    return out;
  }
  friend Series operator*(const R& c, const Series& a) { return a * c; }

  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::string out;
    for (int n = 0; n <= order(); ++n) {
      if (is_zero_coeff((*this)[n])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + (*this)[n].to_string() + ")";
      if (n > 0) out += n == 1 ? "*z" : "*z^" + std::to_string(n);
    }
    if (out.empty()) out = "0";
    return out + " + O(z^" + std::to_string(order() + 1) + ")";
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw std::invalid_argument("Series: order must be nonnegative");
    return static_cast<std::size_t>(order) + 1;
  }
  static bool is_zero_coeff(const R& c) { return c.is_zero(); }

  std::vector<R> coeffs_;
};

using ZSeries = Series<RatPoly>;     // coefficients in Q[t]
using QTSeries = Series<BivarPoly>;  // coefficients in Z[q, t]

/// 1 / s. The constant term must be a unit of the coefficient ring;
/// otherwise std::domain_error.
template <class R>
Series<R> reciprocal(const Series<R>& s) {
  const auto inv0 = unit_inverse(s[0]);
  if (!inv0) {
    throw std::domain_error("reciprocal: constant term " + s[0].to_string() +
                            " is not a unit");
  }
  const int order = s.order();
  Series<R> out(order);
  out[0] = *inv0;
  for (int n = 1; n <= order; ++n) {
    R acc{};
    for (int i = 1; i <= n; ++i) {
      if (s[i].is_zero()) continue;
      acc += s[i] * out[n - i];
    }
    out[n] = -(acc * *inv0);
  }
  return out;
}

template <class R>
Series<R> operator/(const Series<R>& a, const Series<R>& b) {
  return a * reciprocal(b);
}

/// The series s with s*s = a and s(0) = 1. Requires a(0) = 1 exactly.
/// Coefficients follow from 2 s_n = a_n - sum_{0<i<n} s_i s_{n-i}.
inline ZSeries sqrt(const ZSeries& a) {
  if (!(a[0] == RatPoly(1))) {
    throw std::domain_error("sqrt: constant term must be 1, got " + a[0].to_string());
  }
  const int order = a.order();
  ZSeries out(order);
  out[0] = RatPoly(1);
  const Rational half(1, 2);
  for (int n = 1; n <= order; ++n) {
    RatPoly acc = a[n];
    for (int i = 1; i < n; ++i) acc -= out[i] * out[n - i];
    out[n] = acc * half;
  }
  return out;
}

/// d/dz, valid through order - 1.
template <class R>
Series<R> derivative(const Series<R>& a) {
  if (a.order() < 1) throw std::domain_error("derivative: order must be at least 1");
  Series<R> out(a.order() - 1);
  for (int n = 0; n < a.order(); ++n) out[n] = a[n + 1] * R(static_cast<long>(n + 1));
  return out;
}

/// s(-z).
template <class R>
Series<R> negate_z(const Series<R>& a) {
  Series<R> out = a;
  for (int n = 1; n <= a.order(); n += 2) out[n] = -a[n];
  return out;
}

/// sum_n c_{2n+1} z^n.
template <class R>
Series<R> odd_part(const Series<R>& a) {
  if (a.order() < 1) throw std::domain_error("odd_part: order must be at least 1");
  const int order = (a.order() - 1) / 2;
  Series<R> out(order);
  for (int n = 0; n <= order; ++n) out[n] = a[2 * n + 1];
  return out;
}

/// sum_n c_{2n} z^n.
template <class R>
Series<R> even_part(const Series<R>& a) {
  const int order = a.order() / 2;
  Series<R> out(order);
  for (int n = 0; n <= order; ++n) out[n] = a[2 * n];
  return out;
}

/// s(z^2), valid through 2*order + 1 (odd coefficients are known zeros).
template <class R>
Series<R> substitute_z_squared(const Series<R>& a) {
  Series<R> out(2 * a.order() + 1);
  for (int n = 0; n <= a.order(); ++n) out[2 * n] = a[n];
  return out;
}

/// Exact conversion of a Q[t]-series whose coefficients must all be integral;
/// std::domain_error names the first offending coefficient.
std::vector<UnivarPoly> integral_coefficients(const ZSeries& s);

/// Builds a ZSeries from integer polynomials in t.
ZSeries to_zseries(const std::vector<UnivarPoly>& coeffs);

}  // namespace pavstat
