#include "pavstat/statpoly.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "pavstat/permutation.hpp"

namespace pavstat {

namespace {

std::mutex g_memo_mutex;
int g_memo_limit = 13;
std::map<int, std::unique_ptr<AvoiderPolys>> g_memo;

AvoiderPolys compute_polys(int n) {
  // Counts fit in 64 bits (C_30 < 2^64); convert to big integers at the end.
  const int max_exp = n * (n - 1) / 2 + 1;
  const auto stride = static_cast<std::size_t>(n + 1);
  std::vector<std::uint64_t> maj_des(static_cast<std::size_t>(max_exp) * stride, 0);
  std::vector<std::uint64_t> inv_lrm(static_cast<std::size_t>(max_exp) * stride, 0);
  std::uint64_t count = 0;

  for_each_avoider(n, [&](std::span<const int>, const WordStats& s) {
    ++maj_des[static_cast<std::size_t>(s.maj) * stride + static_cast<std::size_t>(s.des)];
    ++inv_lrm[static_cast<std::size_t>(s.inv) * stride + static_cast<std::size_t>(s.lrm)];
    ++count;
  });

  AvoiderPolys out;
  out.n = n;
  out.count = count;
  for (int e = 0; e < max_exp; ++e) {
    for (int k = 0; k <= n; ++k) {
      const auto idx = static_cast<std::size_t>(e) * stride + static_cast<std::size_t>(k);
      if (maj_des[idx]) out.maj.add_term(e, k, BigInt(static_cast<unsigned long>(maj_des[idx])));
      if (inv_lrm[idx]) out.inv.add_term(e, k, BigInt(static_cast<unsigned long>(inv_lrm[idx])));
    }
  }
  return out;
}

}  // namespace

int memo_limit() {
  std::lock_guard lock(g_memo_mutex);
  return g_memo_limit;
}

void set_memo_limit(int n) {
  std::lock_guard lock(g_memo_mutex);
  g_memo_limit = n;
  for (auto it = g_memo.begin(); it != g_memo.end();) {
    it = it->first > n ? g_memo.erase(it) : std::next(it);
  }
}

AvoiderPolys avoider_polys(int n) {
  {
    std::lock_guard lock(g_memo_mutex);
    if (auto it = g_memo.find(n); it != g_memo.end()) return *it->second;
  }
  AvoiderPolys polys = compute_polys(n);
  std::lock_guard lock(g_memo_mutex);
  if (n <= g_memo_limit) g_memo.try_emplace(n, std::make_unique<AvoiderPolys>(polys));
  return polys;
}

BivarPoly maj_poly(int n) { return avoider_polys(n).maj; }
BivarPoly inv_poly(int n) { return avoider_polys(n).inv; }

UnivarPoly a_poly(int n, int k) {
  if (k < 0) throw std::invalid_argument("a_poly: k must be nonnegative");
  return avoider_polys(n).maj.coeff_t(k);
}

UnivarPoly signed_inv_poly(int n) { return avoider_polys(n).inv.at_q(-1); }

BivarPoly inv_poly_transfer(int n) {
  if (n < 0) throw std::invalid_argument("inv_poly_transfer: n must be nonnegative");
  // completions[placed][max]: generating polynomial of the ways to finish a
  // prefix of `placed` entries whose maximum is `max`. Inversions are charged
  // to the larger entry: placing v adds #{unused values < v}.
  const auto size = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<BivarPoly>> completions(size, std::vector<BivarPoly>(size));
  completions[size - 1][size - 1] = BivarPoly(1);
  for (int placed = n - 1; placed >= 0; --placed) {
    for (int max = placed; max <= n; ++max) {
      BivarPoly acc;
      if (placed < max) {
        // smallest unused value lies below max: no inversion charged, no lrm
        acc += completions[static_cast<std::size_t>(placed + 1)][static_cast<std::size_t>(max)];
      }
      for (int v = max + 1; v <= n; ++v) {
        acc += BivarPoly::monomial(1, v - placed - 1, 1) *
               completions[static_cast<std::size_t>(placed + 1)][static_cast<std::size_t>(v)];
      }
      completions[static_cast<std::size_t>(placed)][static_cast<std::size_t>(max)] = std::move(acc);
    }
  }
  return completions[0][0];
}

std::vector<UnivarPoly> signed_inv_polys(int max_n, int brute_force_limit) {
  std::vector<UnivarPoly> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    out.push_back(n <= brute_force_limit ? signed_inv_poly(n)
                                         : inv_poly_transfer(n).at_q(-1));
  }
  return out;
}

}  // namespace pavstat
