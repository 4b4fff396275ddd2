#pragma once

#include <map>
#include <vector>

#include "hvn/numutil.hpp"

namespace hvn {

// A solution of 2g = sum n_d phi(d).
struct TotientSolution {
  std::map<i64, i64> multiplicities;  // d -> n_d, positive entries only
  i64 lcm = 1;
  i64 g = 0;
};

// All solutions for 2g = sum n_d phi(d); `constrained` additionally forces
// n_1 and n_2 even. g <= 8.
std::vector<TotientSolution> totient_solutions(i64 g, bool constrained);

// Max lcm over unconstrained solutions (the largest torsion order in
// GL_2g(Z)).
i64 e_tilde(i64 g);

// tau_m = alpha^m + beta^m for the roots of T^2 - tau T + q.
Int lucas_power_trace(const Int& tau, const Int& q, i64 m);

// All i in [0, ell-2] with e*i == j (mod ell-1).
std::vector<i64> ij_solutions(i64 ell, i64 e, i64 j);

struct BalancedVerdict {
  bool feasible = true;
  std::vector<std::string> reasons;
};

// Feasibility of a balanced profile (g = 1, quadratic base field):
// ord_2(e) > ord_2(ell-1) (hence 4 | e), ell == 3 mod 4, and ell == 11
// mod 12 when e = 12.
BalancedVerdict balanced_constraints(i64 ell, i64 e);

struct SievePair {
  i64 j1 = 0, j2 = 0;  // Tate-Oort pair, e = j1 + j2
  std::vector<i64> ells;
};

struct SieveConfig {
  i64 p_bound = 11;
  i64 ell_min = 13;
  i64 ell_max = 1000;
};

// Candidate non-balanced pairs (j1 < j2, j1 + j2 = e) for
// e in {1,2,3,4,6,8,12}; a prime ell survives when for every p <= p_bound
// (p != ell) some (f in {1,2}, tau) satisfies the Hasse bound, the order
// congruence gcd(e, ell-1) | j1, and tau_e == q^j1 + q^j2 (mod ell).
// Output: nonempty pairs sorted by (j1, j2), ells ascending.
std::vector<SievePair> nonbalanced_sieve(const SieveConfig& cfg = {});

// Eliminations on the sieve output: n_h = 1 rows (0, 2h) need
// ell != 1 mod h; then joint Frobenius trace checks at p in {2, 5} with
// tau == q^i + q^(1-i) against the Hasse bound.
std::vector<SievePair> refine_nonbalanced(const std::vector<SievePair>& table);

// g * (2^(n^2 * e_tilde(g) / 2) + 1)^2.
Int balanced_bound(i64 n, i64 g);

// g * (q^(e/2) + 1)^2, with an exact integer ceiling for odd e.
Int prime_balance_bound(i64 g, i64 q, i64 e);

}  // namespace hvn
