#pragma once

#include <vector>

#include "hvn/numutil.hpp"

namespace hvn {

// Least positive r with r^2 == N (mod ell), or nullopt when N is a
// non-residue. Requires gcd(N, ell) = 1, ell an odd prime.
std::optional<i64> least_sqrt_mod(i64 N, i64 ell);

// Primes p with (p/ell) = 1 and r_ell(4p) > 2*sqrt(p). Complete: the
// qualifying p satisfy p <= ell^2/16.
std::vector<i64> n_set(i64 ell);

// Fundamental discriminants |disc| <= disc_bound in which every p in
// n_set(ell) is inert; real_only restricts to disc > 0. Sorted by |disc|.
std::vector<i64> vertical_sieve(i64 ell, i64 disc_bound, bool real_only);

struct HorizontalResult {
  std::vector<i64> split_primes;  // split primes of K up to p_cap
  std::vector<i64> survivors;     // ells not eliminated
};

// Primes ell in (ell_min, ell_max] such that no split prime p <= p_cap of
// K = Q(sqrt(d)) has 4p < ell and (p/ell) = 1.
HorizontalResult horizontal_sieve(i64 d, i64 ell_min, i64 ell_max, i64 p_cap);

}  // namespace hvn
