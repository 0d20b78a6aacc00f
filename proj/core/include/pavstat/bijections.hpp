#pragma once

// Constructive checks of the bijective and parity arguments around
// Av_n(321): 180-degree rotation orbits, the inflation description of its
// fixed points, the parity theorems at n = 2^m - 1, and symmetric Dyck paths.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pavstat/check.hpp"
#include "pavstat/permutation.hpp"
#include "pavstat/poly.hpp"

namespace pavstat {

enum class Step : char { up = 'U', down = 'D' };

class DyckPath {
 public:
  DyckPath() = default;
  /// Throws std::invalid_argument unless the steps are balanced and every
  /// prefix has at least as many U as D.
  explicit DyckPath(std::vector<Step> steps);
  static DyckPath parse(std::string_view text);  // e.g. "UUDD"

  int semilength() const noexcept { return static_cast<int>(steps_.size()) / 2; }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  /// Number of UD factors.
  int peaks() const;
  /// Invariant under reflection in the vertical line through the midpoint:
  /// s_i = U exactly when s_{2n+1-i} = D.
  bool is_symmetric() const;

  std::string to_string() const;
  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// Every Dyck path of semilength n, in lexicographic order with U < D.
std::vector<DyckPath> dyck_paths(int n);

/// Number of symmetric Dyck paths of semilength n with exactly k peaks, by
/// exhaustive generation.
BigInt count_symmetric_dyck(int n, int k);

/// All counts for semilength n in one pass: result[k] for 0 <= k <= n.
std::vector<BigInt> symmetric_dyck_row(int n);

/// True iff n = 2^m - 1 for some m >= 0.
bool is_mersenne_length(int n);

/// Constant coefficient 1, every other coefficient even. Throws
/// std::invalid_argument unless n = 2^m - 1.
bool parity_inv(int n);     // [q^k] I_n(q,1)
bool parity_maj_q(int n);   // [q^k] M_n(q,1)
bool parity_maj_t(int n);   // [t^k] M_n(1,t) = A_{n,k}(1)

struct FixedPointSets {
  std::vector<Permutation> brute_force;   // rotation-fixed avoiders, des = k
  std::vector<Permutation> constructive;  // 123[tau, 1, rotate180(tau)]
  bool coincide = false;
};

/// Fixed points of rotate180 among sigma in Av_n(321) with des = k, found by
/// brute force and by the inflation description; both lists are sorted.
/// Requires n odd and k even, nonnegative (std::invalid_argument otherwise).
FixedPointSets r180_fixed_points(int n, int k);

struct OrbitStats {
  int n = 0;
  int k = 0;
  int target_maj = 0;
  int partner_maj = 0;            // n*k - target_maj
  std::uint64_t class_size = 0;   // #{sigma : des = k, maj = target_maj}
  std::uint64_t partner_size = 0; // #{sigma : des = k, maj = partner_maj}
  std::map<int, std::uint64_t> orbit_sizes;  // orbit size -> count
  bool image_is_partner = false;  // rotate180 maps the class onto the partner class
};

/// Orbits of rotate180 on the class {sigma in Av_n(321) : des = k,
/// maj = target_maj} together with its image.
OrbitStats orbit_partition(int n, int k, int target_maj);

/// For every k and i: rotate180 maps the maj-i class bijectively onto the
/// maj-(nk-i) class, and orbits of the middle class have size 1 or 2.
CheckResult verify_orbit_pairing(int n);

}  // namespace pavstat
