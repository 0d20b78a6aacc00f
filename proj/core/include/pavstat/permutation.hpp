#pragma once

// One-line permutations, pattern containment, the four classical statistics
// (des, maj, inv, lrm), diagram rotation and inflation, and a fast
// lexicographic enumerator of 321-avoiding permutations.

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pavstat {

/// A permutation of {1..n} stored as its one-line word b_1 ... b_n.
/// Positions are 1-indexed in every public accessor.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `word` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word)
      : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);

  /// Accepts "216534" (single digits, n <= 9) or separated lists such as
  /// "2,1,6,5,3,4" / "10 2 1 ...". The empty string is the empty permutation.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  bool empty() const noexcept { return word_.empty(); }

  /// Value at 1-indexed position i.
  int operator()(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }

  std::span<const int> word() const noexcept { return word_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// True iff some subsequence of `sigma` is order isomorphic to `pattern`.
bool contains_pattern(const Permutation& sigma, const Permutation& pattern);
inline bool avoids(const Permutation& sigma, const Permutation& pattern) {
  return !contains_pattern(sigma, pattern);
}

/// Des(sigma) as 1-indexed positions i with b_i > b_{i+1}.
std::vector<int> descent_set(const Permutation& sigma);

int des(const Permutation& sigma);
int maj(const Permutation& sigma);
int inv(const Permutation& sigma);
int lrm(const Permutation& sigma);

/// Rotation of the permutation diagram by 180 degrees:
/// r(i) = n + 1 - sigma(n + 1 - i).
Permutation rotate180(const Permutation& sigma);

/// pi[parts_1, ..., parts_m]: the dot (i, pi(i)) of pi's diagram is replaced
/// by a copy of parts_i. All parts must be nonempty and there must be exactly
/// one per entry of pi; otherwise std::invalid_argument.
Permutation inflate(const Permutation& pi, std::span<const Permutation> parts);

/// Statistics of a 321-avoiding word, maintained incrementally by the
/// enumerator.
struct WordStats {
  int des = 0;
  int maj = 0;
  int inv = 0;
  int lrm = 0;
};

inline constexpr int kMaxEnumerationLength = 30;

namespace detail {

struct AvoiderFrame {
  std::uint32_t used = 0;  // bit v set iff value v already placed
  int max = 0;             // largest value placed so far
  int floor = 0;           // largest value that is the lower end of an inversion
  int last = 0;            // last value placed
  WordStats stats;
};

template <class Visitor>
void enumerate_avoiders(int n, int pos, const AvoiderFrame& frame,
                        std::vector<int>& word, Visitor& visit) {
  if (pos == n) {
    visit(std::span<const int>(word), frame.stats);
    return;
  }
  const std::uint32_t unused_mask =
      ~frame.used & (((std::uint32_t{1} << n) - 1) << 1);
  const int smallest_unused = std::countr_zero(unused_mask);
  for (int v = frame.floor + 1; v <= n; ++v) {
    if (frame.used & (std::uint32_t{1} << v)) continue;
    // A value below the running maximum becomes the lower end of an
    // inversion; any smaller unused value could then never be placed.
    if (v < frame.max && v != smallest_unused) continue;

    AvoiderFrame next = frame;
    next.used |= std::uint32_t{1} << v;
    next.last = v;
    next.stats.inv += std::popcount(frame.used >> (v + 1));
    if (pos > 0 && frame.last > v) {
      ++next.stats.des;
      next.stats.maj += pos;  // descent at 1-indexed position `pos`
    }
    if (v > frame.max) {
      next.max = v;
      ++next.stats.lrm;
    } else {
      next.floor = v;
    }
    word[static_cast<std::size_t>(pos)] = v;
    enumerate_avoiders(n, pos + 1, next, word, visit);
  }
}

}  // namespace detail

/// Calls visit(word, stats) for every sigma in Av_n(321), exactly once each,
/// in lexicographic order of the word. Prefixes are pruned as soon as they
/// would contain 321, so the cost is linear in the number of avoiders.
template <class Visitor>
void for_each_avoider(int n, Visitor&& visit) {
  if (n < 0 || n > kMaxEnumerationLength) {
    throw std::out_of_range("for_each_avoider: n must lie in [0, " +
                            std::to_string(kMaxEnumerationLength) + "]");
  }
  std::vector<int> word(static_cast<std::size_t>(n));
  detail::enumerate_avoiders(n, 0, detail::AvoiderFrame{}, word, visit);
}

std::vector<Permutation> avoiders_321(int n);
std::uint64_t count_avoiders_321(int n);

/// All n! permutations in lexicographic order; test and oracle use only.
std::vector<Permutation> all_permutations(int n);

}  // namespace pavstat
