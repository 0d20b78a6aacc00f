#include "pavstat/cfrac.hpp"

#include <random>

namespace pavstat {

// -------------------------------------------------------------- ZPolynomial

ZPolynomial::ZPolynomial(long constant) : ZPolynomial(BivarPoly(constant)) {}

ZPolynomial::ZPolynomial(const BivarPoly& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

ZPolynomial ZPolynomial::term(const BivarPoly& coeff, int z_power) {
  if (z_power < 0) throw std::invalid_argument("ZPolynomial::term: negative power");
  ZPolynomial p;
  if (coeff.is_zero()) return p;
  p.coeffs_.resize(static_cast<std::size_t>(z_power) + 1);
  p.coeffs_.back() = coeff;
  return p;
}

int ZPolynomial::z_valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

void ZPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QTSeries ZPolynomial::to_series(int order) const {
  return QTSeries(coeffs_, order);
}

ZPolynomial ZPolynomial::substituted(const BigInt& q0, const BigInt& t0) const {
  ZPolynomial out = *this;
  for (auto& c : out.coeffs_) c = c.substituted(q0, t0);
  out.trim();
  return out;
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
  ZPolynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

ZPolynomial operator-(const ZPolynomial& a) {
  ZPolynomial out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string ZPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += coeffs_[i].to_string();
      continue;
    }
    const std::string zf = i == 1 ? "z" : "z^" + std::to_string(i);
    if (coeffs_[i] == BivarPoly(1)) {
      out += zf;
    } else if (coeffs_[i] == BivarPoly(-1)) {
      out += "-" + zf;
    } else {
      out += "(" + coeffs_[i].to_string() + ")*" + zf;
    }
  }
  return out;
}

// ------------------------------------------------------------------- CFSpec

CFSpec CFSpec::prefix(int depth) const {
  if (depth < 0 || depth > this->depth()) {
    throw std::out_of_range("CFSpec::prefix: depth out of range");
  }
  CFSpec out;
  out.lead = lead;
  out.levels.assign(levels.begin(), levels.begin() + depth);
  return out;
}

CFSpec CFSpec::normalized() const {
  CFSpec out = *this;
  for (auto& level : out.levels) {
    if (level.sign == Sign::minus) {
      level.numerator = -level.numerator;
      level.sign = Sign::plus;
    }
  }
  return out;
}

CFSpec CFSpec::substituted(const BigInt& q0, const BigInt& t0) const {
  CFSpec out = *this;
  out.lead = lead.substituted(q0, t0);
  for (auto& level : out.levels) {
    level.numerator = level.numerator.substituted(q0, t0);
    level.denominator = level.denominator.substituted(q0, t0);
  }
  return out;
}

// ---------------------------------------------------------------- expansion

QTSeries evaluate(const CFSpec& cf, int order) {
  QTSeries tail(order);
  for (auto it = cf.levels.rbegin(); it != cf.levels.rend(); ++it) {
    QTSeries numerator = it->numerator.to_series(order);
    if (it->sign == Sign::minus) numerator = -numerator;
    tail = numerator / (it->denominator.to_series(order) + tail);
  }
  return cf.lead.to_series(order) + tail;
}

QTSeries expand(const CFSpec& cf, int order) {
  QTSeries full = evaluate(cf, order);
  if (cf.depth() >= 2) {
    const QTSeries shorter = evaluate(cf.prefix(cf.depth() - 1), order);
    if (!full.agrees_with(shorter, order)) {
      throw InsufficientDepth("expand: depth " + std::to_string(cf.depth()) +
                              " does not determine the series through z^" +
                              std::to_string(order));
    }
  }
  return full;
}

CFSpec catalan_cf(int depth) {
  if (depth < 1) throw std::invalid_argument("catalan_cf: depth must be at least 1");
  CFSpec cf;
  cf.levels.push_back({Sign::plus, ZPolynomial(1), ZPolynomial(1)});
  for (int i = 2; i <= depth; ++i) {
    cf.levels.push_back({Sign::minus, ZPolynomial::term(BivarPoly(1), 1), ZPolynomial(1)});
  }
  return cf;
}

CFSpec sti_cf(int depth) {
  if (depth < 1) throw std::invalid_argument("sti_cf: depth must be at least 1");
  CFSpec cf;
  cf.levels.push_back({Sign::plus, ZPolynomial(1), ZPolynomial(1)});
  for (int i = 2; i <= depth; ++i) {
    // numerators alternate t q^j z and q^{j+1} z for j = 0, 1, 2, ...
    const int j = i - 2;
    const BivarPoly coeff = j % 2 == 0 ? BivarPoly::monomial(1, j / 2, 1)
                                       : BivarPoly::monomial(1, (j + 1) / 2, 0);
    cf.levels.push_back({Sign::minus, ZPolynomial::term(coeff, 1), ZPolynomial(1)});
  }
  return cf;
}

namespace {

// a_1, ..., a_d of an all-plus continued fraction with unit denominators;
// index 0 is unused so that a[i] matches the usual 1-based subscripts.
std::vector<ZPolynomial> plain_numerators(const CFSpec& cf, int min_depth) {
  const CFSpec plain = cf.normalized();
  if (!plain.lead.is_zero()) {
    throw std::invalid_argument("contraction: continued fraction must have zero lead");
  }
  for (const auto& level : plain.levels) {
    if (!(level.denominator == ZPolynomial(1))) {
      throw std::invalid_argument("contraction: denominators must all be 1");
    }
  }
  if (plain.depth() < min_depth) {
    throw InsufficientDepth("contraction: need depth at least " + std::to_string(min_depth));
  }
  std::vector<ZPolynomial> a(1);
  for (const auto& level : plain.levels) a.push_back(level.numerator);
  return a;
}

}  // namespace

CFSpec even_part(const CFSpec& cf) {
  const auto a = plain_numerators(cf, 2);
  const int d = static_cast<int>(a.size()) - 1;
  const ZPolynomial one(1);
  CFSpec out;
  out.levels.push_back({Sign::plus, a[1], one + a[2]});
  for (int j = 1; 2 * j + 2 <= d; ++j) {
    const auto i = static_cast<std::size_t>(2 * j);
    out.levels.push_back({Sign::minus, a[i] * a[i + 1], one + a[i + 1] + a[i + 2]});
  }
  return out;
}

CFSpec odd_part(const CFSpec& cf) {
  const auto a = plain_numerators(cf, 3);
  const int d = static_cast<int>(a.size()) - 1;
  const ZPolynomial one(1);
  CFSpec out;
  out.lead = a[1];
  for (int j = 1; 2 * j + 1 <= d; ++j) {
    const auto i = static_cast<std::size_t>(2 * j);
    out.levels.push_back({Sign::minus, a[i - 1] * a[i], one + a[i] + a[i + 1]});
  }
  return out;
}

CFSpec random_monomial_cf(std::uint64_t seed, int depth) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exponent(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  CFSpec cf;
  for (int i = 1; i <= depth; ++i) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    const int a = exponent(rng);
    const int b = exponent(rng);
    const int d = coin(rng) + (i == 1 ? 0 : 1);
    const Sign sign = coin(rng) ? Sign::plus : Sign::minus;
    cf.levels.push_back(
        {sign, ZPolynomial::term(BivarPoly::monomial(c, a, b), d), ZPolynomial(1)});
  }
  return cf;
}

}  // namespace pavstat
