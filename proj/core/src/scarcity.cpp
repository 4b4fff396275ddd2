#include "hvn/scarcity.hpp"

#include <algorithm>
#include <cmath>

namespace hvn {

std::optional<i64> least_sqrt_mod(i64 N, i64 ell) {
  if (ell <= 2 || !is_prime(static_cast<u64>(ell)))
    throw std::invalid_argument("least_sqrt_mod: ell must be an odd prime");
  i64 n = ((N % ell) + ell) % ell;
  if (n == 0) throw std::invalid_argument("least_sqrt_mod: ell divides N");
  auto r = sqrt_mod(static_cast<u64>(n), static_cast<u64>(ell));
  if (!r.has_value()) return std::nullopt;
  i64 a = static_cast<i64>(*r);
  return std::min(a, ell - a);
}

std::vector<i64> n_set(i64 ell) {
  if (ell < 7) throw std::invalid_argument("n_set: ell must be >= 7");
  std::vector<i64> out;
  i64 p_max = ell * ell / 16;
  for (i64 p : primes_up_to(p_max)) {
    if (p == ell) continue;
    if (legendre(p, ell) != 1) continue;
    auto r = least_sqrt_mod(4 * p, ell);
    HVN_CHECK(r.has_value());
    if (*r * *r > 4 * p) out.push_back(p);  // r_ell(4p) > 2 sqrt(p), exactly
  }
  return out;
}

std::vector<i64> vertical_sieve(i64 ell, i64 disc_bound, bool real_only) {
  std::vector<i64> bad_primes = n_set(ell);
  // squarefree flags up to disc_bound
  std::vector<bool> not_sf(static_cast<size_t>(disc_bound) + 1, false);
  for (i64 q = 2; q * q <= disc_bound; ++q)
    for (i64 m = q * q; m <= disc_bound; m += q * q) not_sf[m] = true;
  auto is_fundamental = [&](i64 disc) {
    i64 a = std::abs(disc);
    i64 m = ((disc % 4) + 4) % 4;
    if (m == 1) return !not_sf[a];
    if (m != 0) return false;
    i64 d = disc / 4;
    i64 dm = ((d % 4) + 4) % 4;
    if (dm != 2 && dm != 3) return false;
    return !not_sf[std::abs(d)];
  };
  std::vector<i64> survivors;
  for (i64 a = 2; a <= disc_bound; ++a) {
    for (i64 disc : {a, -a}) {
      if (disc < 0 && real_only) continue;
      if (!is_fundamental(disc)) continue;
      // Every p in the set must be inert: split p contradicts the trace
      // congruence directly, and ramified p has f = 1, so the same
      // congruence a^2 == 4p applies and fails the Hasse bound as well.
      bool ok = true;
      for (i64 p : bad_primes) {
        if (kronecker(disc, p) != -1) {
          ok = false;
          break;
        }
      }
      if (ok) survivors.push_back(disc);
    }
  }
  return survivors;
}

HorizontalResult horizontal_sieve(i64 d, i64 ell_min, i64 ell_max, i64 p_cap) {
  if (ell_min < 5) throw std::invalid_argument("horizontal_sieve: ell_min must be >= 5");
  i64 disc = (((d % 4) + 4) % 4 == 1) ? d : 4 * d;
  HorizontalResult res;
  for (i64 p : primes_up_to(p_cap))
    if (kronecker(disc, p) == 1) res.split_primes.push_back(p);

  // sieve of Eratosthenes over [2, ell_max]
  std::vector<bool> comp(static_cast<size_t>(ell_max) + 1, false);
  for (i64 i = 2; i * i <= ell_max; ++i)
    if (!comp[i])
      for (i64 j = i * i; j <= ell_max; j += i) comp[j] = true;

  for (i64 ell = std::max<i64>(2, ell_min); ell <= ell_max; ++ell) {
    if (comp[ell]) continue;
    bool eliminated = false;
    for (i64 p : res.split_primes) {
      if (4 * p >= ell) break;  // split_primes ascending
      if (p == ell) continue;
      if (legendre(p, ell) == 1) {
        eliminated = true;
        break;
      }
    }
    if (!eliminated) res.survivors.push_back(ell);
  }
  return res;
}

}  // namespace hvn
