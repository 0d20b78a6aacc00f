#include "pavstat/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pavstat/statpoly.hpp"

namespace pavstat {

// ----------------------------------------------------------------- DyckPath

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int height = 0;
  for (Step s : steps_) {
    height += s == Step::up ? 1 : -1;
    if (height < 0) throw std::invalid_argument("DyckPath: prefix goes below zero");
  }
  if (height != 0) throw std::invalid_argument("DyckPath: unbalanced steps");
}

DyckPath DyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  for (char c : text) {
    if (c == 'U') {
      steps.push_back(Step::up);
    } else if (c == 'D') {
      steps.push_back(Step::down);
    } else {
      throw std::invalid_argument("DyckPath::parse: expected U or D");
    }
  }
  return DyckPath(std::move(steps));
}

int DyckPath::peaks() const {
  int count = 0;
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    if (steps_[i] == Step::up && steps_[i + 1] == Step::down) ++count;
  }
  return count;
}

bool DyckPath::is_symmetric() const {
  const std::size_t len = steps_.size();
  for (std::size_t i = 0; i < len; ++i) {
    if ((steps_[i] == Step::up) != (steps_[len - 1 - i] == Step::down)) return false;
  }
  return true;
}

std::string DyckPath::to_string() const {
  std::string out;
  for (Step s : steps_) out += static_cast<char>(s);
  return out;
}

namespace {

template <class Visitor>
void grow_paths(int n, int ups, int downs, std::vector<Step>& prefix, Visitor& visit) {
  if (ups == n && downs == n) {
    visit(prefix);
    return;
  }
  if (ups < n) {
    prefix.push_back(Step::up);
    grow_paths(n, ups + 1, downs, prefix, visit);
    prefix.pop_back();
  }
  if (downs < ups) {
    prefix.push_back(Step::down);
    grow_paths(n, ups, downs + 1, prefix, visit);
    prefix.pop_back();
  }
}

void check_semilength(int n) {
  if (n < 0 || n > 16) throw std::out_of_range("Dyck path semilength must lie in [0, 16]");
}

}  // namespace

std::vector<DyckPath> dyck_paths(int n) {
  check_semilength(n);
  std::vector<DyckPath> out;
  std::vector<Step> prefix;
  auto collect = [&](const std::vector<Step>& steps) { out.emplace_back(steps); };
  grow_paths(n, 0, 0, prefix, collect);
  return out;
}

std::vector<BigInt> symmetric_dyck_row(int n) {
  check_semilength(n);
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Step> prefix;
  auto tally = [&](const std::vector<Step>& steps) {
    const DyckPath path(steps);
    if (path.is_symmetric()) ++row[static_cast<std::size_t>(path.peaks())];
  };
  grow_paths(n, 0, 0, prefix, tally);
  std::vector<BigInt> out;
  for (auto c : row) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

BigInt count_symmetric_dyck(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("count_symmetric_dyck: need n, k >= 1");
  if (k > n) return 0;
  return symmetric_dyck_row(n)[static_cast<std::size_t>(k)];
}

// ------------------------------------------------------------------ parity

bool is_mersenne_length(int n) {
  return n >= 0 && ((static_cast<unsigned>(n) + 1) & static_cast<unsigned>(n)) == 0;
}

namespace {

void require_mersenne(int n, const char* who) {
  if (!is_mersenne_length(n)) {
    throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) +
                                " is not of the form 2^m - 1");
  }
}

bool one_then_even(const UnivarPoly& p) {
  if (p.coeff(0) != 1) return false;
  for (const auto& [e, c] : p.coeffs()) {
    if (e > 0 && mpz_even_p(c.get_mpz_t()) == 0) return false;
  }
  return true;
}

}  // namespace

bool parity_inv(int n) {
  require_mersenne(n, "parity_inv");
  return one_then_even(inv_poly(n).at_t(1));
}

bool parity_maj_q(int n) {
  require_mersenne(n, "parity_maj_q");
  return one_then_even(maj_poly(n).at_t(1));
}

bool parity_maj_t(int n) {
  require_mersenne(n, "parity_maj_t");
  return one_then_even(maj_poly(n).at_q(1));
}

// ------------------------------------------------------------ fixed points

FixedPointSets r180_fixed_points(int n, int k) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("r180_fixed_points: n must be odd");
  if (k < 0 || k % 2 != 0) {
    throw std::invalid_argument("r180_fixed_points: k must be even and nonnegative");
  }
  FixedPointSets out;
  for (const auto& sigma : avoiders_321(n)) {
    if (des(sigma) == k && rotate180(sigma) == sigma) out.brute_force.push_back(sigma);
  }
  const Permutation frame{1, 2, 3};
  const Permutation dot{1};
  for (const auto& tau : avoiders_321((n - 1) / 2)) {
    if (des(tau) != k / 2) continue;
    if (tau.empty()) {
      // n = 1: the inflation degenerates to the single central dot.
      out.constructive.push_back(dot);
      continue;
    }
    const std::vector<Permutation> parts{tau, dot, rotate180(tau)};
    out.constructive.push_back(inflate(frame, parts));
  }
  std::sort(out.brute_force.begin(), out.brute_force.end());
  std::sort(out.constructive.begin(), out.constructive.end());
  out.coincide = out.brute_force == out.constructive;
  return out;
}

// ------------------------------------------------------------------ orbits

OrbitStats orbit_partition(int n, int k, int target_maj) {
  if (n < 1) throw std::invalid_argument("orbit_partition: n must be at least 1");
  OrbitStats stats;
  stats.n = n;
  stats.k = k;
  stats.target_maj = target_maj;
  stats.partner_maj = n * k - target_maj;

  std::set<Permutation> cls;
  std::set<Permutation> partner;
  for (const auto& sigma : avoiders_321(n)) {
    if (des(sigma) != k) continue;
    const int m = maj(sigma);
    if (m == target_maj) cls.insert(sigma);
    if (m == stats.partner_maj) partner.insert(sigma);
  }
  stats.class_size = cls.size();
  stats.partner_size = partner.size();

  std::set<Permutation> image;
  for (const auto& sigma : cls) image.insert(rotate180(sigma));
  stats.image_is_partner = image == partner;

  std::set<Permutation> seen;
  for (const auto& start : cls) {
    if (seen.count(start)) continue;
    Permutation current = start;
    int size = 0;
    do {
      seen.insert(current);
      current = rotate180(current);
      ++size;
    } while (!(current == start));
    ++stats.orbit_sizes[size];
  }
  return stats;
}

CheckResult verify_orbit_pairing(int n) {
  for (int k = 0; 2 * k <= n; ++k) {
    const int lo = k * k;
    const int hi = n * k - k * k;
    for (int i = lo; i <= hi; ++i) {
      const OrbitStats s = orbit_partition(n, k, i);
      if (!s.image_is_partner || s.class_size != s.partner_size) {
        return CheckResult::fail("rotation does not pair maj " + std::to_string(i) +
                                 " with maj " + std::to_string(s.partner_maj) + " at n=" +
                                 std::to_string(n) + ", k=" + std::to_string(k));
      }
      for (const auto& [size, count] : s.orbit_sizes) {
        if (size != 1 && size != 2) {
          return CheckResult::fail("orbit of size " + std::to_string(size) + " at n=" +
                                   std::to_string(n) + ", k=" + std::to_string(k));
        }
      }
      if (2 * i != n * k && s.orbit_sizes.count(1)) {
        return CheckResult::fail("fixed point outside the middle class at n=" +
                                 std::to_string(n) + ", k=" + std::to_string(k));
      }
    }
  }
  return CheckResult::pass("rotation pairs maj i with nk - i for every k at n=" +
                           std::to_string(n));
}

}  // namespace pavstat
