#pragma once

// Statistic polynomials of Av_n(321) by direct summation over the avoiders.
// Nothing here consults a closed formula; these are the oracles every
// formula and identity elsewhere is checked against.

#include <cstdint>
#include <vector>

#include "pavstat/poly.hpp"

namespace pavstat {

/// Everything one enumeration pass over Av_n(321) produces.
struct AvoiderPolys {
  int n = 0;
  std::uint64_t count = 0;
  BivarPoly maj;  // M_n(q,t) = sum q^maj t^des
  BivarPoly inv;  // I_n(q,t) = sum q^inv t^lrm
};

/// One brute-force pass. Results for n <= memo_limit() are cached.
AvoiderPolys avoider_polys(int n);

/// Largest n whose enumeration results are kept in memory (default 13).
int memo_limit();
void set_memo_limit(int n);

BivarPoly maj_poly(int n);
BivarPoly inv_poly(int n);

/// A_{n,k}(q) = [t^k] M_n(q,t).
UnivarPoly a_poly(int n, int k);

/// I_n(-1,t).
UnivarPoly signed_inv_poly(int n);

/// I_n(q,t) by a transfer recursion over (entries placed, current maximum)
/// states: every 321-avoider is built by placing either a new left-right
/// maximum or the smallest unused value. Scales to n around 30, used to
/// extend oracle series past the reach of brute force; cross-checked against
/// inv_poly for small n.
BivarPoly inv_poly_transfer(int n);

/// I_0(-1,t), ..., I_max_n(-1,t): brute force up to `brute_force_limit`,
/// transfer recursion above it.
std::vector<UnivarPoly> signed_inv_polys(int max_n, int brute_force_limit = 13);

}  // namespace pavstat
