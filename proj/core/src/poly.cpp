#include "pavstat/poly.hpp"

#include <stdexcept>

namespace pavstat {

namespace {

void check_exponent(int e) {
  if (e < 0) throw std::invalid_argument("polynomial exponents must be nonnegative");
}

std::string power_factor(char var, int e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

// Appends one signed term "c*factor" to `out` using the usual "a + b - c"
// layout.
void append_term(std::string& out, const BigInt& c, const std::string& factor) {
  const bool negative = sgn(c) < 0;
  const BigInt mag = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (factor.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += factor;
  } else {
    out += mag.get_str() + "*" + factor;
  }
}

BigInt power(const BigInt& base, int e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- BivarPoly

BivarPoly::BivarPoly(long constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, BigInt(constant));
}

BivarPoly::BivarPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

BivarPoly BivarPoly::monomial(const BigInt& coeff, int q_exp, int t_exp) {
  BivarPoly p;
  p.add_term(q_exp, t_exp, coeff);
  return p;
}

void BivarPoly::add_term(int q_exp, int t_exp, const BigInt& coeff) {
  check_exponent(q_exp);
  check_exponent(t_exp);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{q_exp, t_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool BivarPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

BigInt BivarPoly::coeff_of(int q_exp, int t_exp) const {
  auto it = terms_.find(Monomial{q_exp, t_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BivarPoly::q_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.q);
  return d;
}

int BivarPoly::t_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.t);
  return d;
}

BigInt BivarPoly::eval(const BigInt& q0, const BigInt& t0) const {
  BigInt sum = 0;
  for (const auto& [m, c] : terms_) sum += c * power(q0, m.q) * power(t0, m.t);
  return sum;
}

UnivarPoly BivarPoly::coeff_t(int k) const {
  UnivarPoly out(Var::q);
  for (const auto& [m, c] : terms_) {
    if (m.t == k) out.add_term(m.q, c);
  }
  return out;
}

UnivarPoly BivarPoly::coeff_q(int k) const {
  UnivarPoly out(Var::t);
  for (const auto& [m, c] : terms_) {
    if (m.q == k) out.add_term(m.t, c);
  }
  return out;
}

UnivarPoly BivarPoly::at_q(const BigInt& q0) const {
  UnivarPoly out(Var::t);
  for (const auto& [m, c] : terms_) out.add_term(m.t, c * power(q0, m.q));
  return out;
}

UnivarPoly BivarPoly::at_t(const BigInt& t0) const {
  UnivarPoly out(Var::q);
  for (const auto& [m, c] : terms_) out.add_term(m.q, c * power(t0, m.t));
  return out;
}

BivarPoly BivarPoly::substituted(const BigInt& q0, const BigInt& t0) const {
  return BivarPoly(eval(q0, t0));
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m.q, m.t, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m.q, m.t, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma.q + mb.q, ma.t + mb.t, ca * cb);
    }
  }
  return out;
}

BivarPoly operator-(const BivarPoly& a) {
  BivarPoly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string factor = power_factor('q', m.q);
    const std::string tf = power_factor('t', m.t);
    if (!factor.empty() && !tf.empty()) factor += "*";
    factor += tf;
    append_term(out, c, factor);
  }
  return out;
}

BivarPoly pow(const BivarPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  BivarPoly out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

// --------------------------------------------------------------- UnivarPoly

UnivarPoly::UnivarPoly(Var var, const BigInt& constant) : var_(var) {
  add_term(0, constant);
}

UnivarPoly::UnivarPoly(Var var, const std::vector<BigInt>& dense) : var_(var) {
  for (std::size_t i = 0; i < dense.size(); ++i) add_term(static_cast<int>(i), dense[i]);
}

UnivarPoly UnivarPoly::monomial(Var var, const BigInt& coeff, int exp) {
  UnivarPoly p(var);
  p.add_term(exp, coeff);
  return p;
}

BigInt UnivarPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void UnivarPoly::add_term(int exp, const BigInt& coeff) {
  check_exponent(exp);
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

int UnivarPoly::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

int UnivarPoly::min_degree() const {
  return coeffs_.empty() ? -1 : coeffs_.begin()->first;
}

std::vector<BigInt> UnivarPoly::support_window() const {
  if (coeffs_.empty()) return {};
  std::vector<BigInt> out;
  for (int e = min_degree(); e <= degree(); ++e) out.push_back(coeff(e));
  return out;
}

BigInt UnivarPoly::eval(const BigInt& x) const {
  BigInt sum = 0;
  for (const auto& [e, c] : coeffs_) sum += c * power(x, e);
  return sum;
}

namespace {

Var merged_var(const UnivarPoly& a, const UnivarPoly& b) {
  const bool a_const = a.degree() <= 0;
  const bool b_const = b.degree() <= 0;
  if (!a_const && !b_const && a.var() != b.var()) {
    throw std::invalid_argument("UnivarPoly: mixing polynomials in different variables");
  }
  return a_const ? b.var() : a.var();
}

}  // namespace

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& rhs) {
  var_ = merged_var(*this, rhs);
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
  return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& rhs) {
  var_ = merged_var(*this, rhs);
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
  return *this;
}

UnivarPoly& UnivarPoly::operator*=(const UnivarPoly& rhs) {
  UnivarPoly out(merged_var(*this, rhs));
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : rhs.coeffs_) out.add_term(ea + eb, ca * cb);
  }
  *this = std::move(out);
  return *this;
}

UnivarPoly operator-(const UnivarPoly& a) {
  UnivarPoly out = a;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

bool operator==(const UnivarPoly& a, const UnivarPoly& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  return a.degree() <= 0 || a.var_ == b.var_;
}

std::string UnivarPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    append_term(out, c, power_factor(static_cast<char>(var_), e));
  }
  return out;
}

// --------------------------------------------------------- shape predicates

bool is_symmetric(const UnivarPoly& p) {
  if (p.is_zero()) return true;
  const int r = p.min_degree();
  const int s = p.degree();
  for (const auto& [e, c] : p.coeffs()) {
    if (p.coeff(r + s - e) != c) return false;
  }
  return true;
}

bool is_unimodal(const std::vector<BigInt>& seq) {
  std::size_t i = 1;
  while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
  while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
  return i >= seq.size();
}

bool is_log_concave(const std::vector<BigInt>& seq) {
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return false;
  }
  return true;
}

bool is_unimodal(const UnivarPoly& p) { return is_unimodal(p.support_window()); }
bool is_log_concave(const UnivarPoly& p) { return is_log_concave(p.support_window()); }

// ------------------------------------------------------------------ RatPoly

RatPoly::RatPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

RatPoly::RatPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

RatPoly::RatPoly(std::vector<Rational> dense) : coeffs_(std::move(dense)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(const UnivarPoly& p) {
  if (p.is_zero()) return;
  coeffs_.assign(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
  for (const auto& [e, c] : p.coeffs()) coeffs_[static_cast<std::size_t>(e)] = Rational(c);
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int exp) const {
  if (exp < 0 || exp >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exp)];
}

bool RatPoly::is_integral() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

UnivarPoly RatPoly::to_integral(Var var) const {
  UnivarPoly out(var);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].get_den() != 1) {
      throw std::domain_error("RatPoly::to_integral: non-integral coefficient " +
                              coeffs_[i].get_str() + " in " + to_string());
    }
    out.add_term(static_cast<int>(i), coeffs_[i].get_num());
  }
  return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a) {
  RatPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string RatPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const std::string factor = power_factor('t', static_cast<int>(i));
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (factor.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factor;
    } else {
      out += mag.get_str() + "*" + factor;
    }
  }
  return out;
}

RatPoly pow(const RatPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  RatPoly out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::optional<BivarPoly> unit_inverse(const BivarPoly& c) {
  if (!c.is_constant()) return std::nullopt;
  const BigInt k = c.constant_term();
  if (k == 1 || k == -1) return BivarPoly(k);
  return std::nullopt;
}

std::optional<RatPoly> unit_inverse(const RatPoly& c) {
  if (c.is_zero() || !c.is_constant()) return std::nullopt;
  return RatPoly(Rational(1) / c.coeff(0));
}

}  // namespace pavstat
