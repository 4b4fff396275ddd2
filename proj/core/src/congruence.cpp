#include "hvn/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hvn {

namespace {

void enumerate_solutions(i64 budget, size_t idx, const std::vector<i64>& ds,
                         std::map<i64, i64>& current, std::vector<TotientSolution>& out, i64 g,
                         bool constrained) {
  if (budget == 0) {
    TotientSolution sol;
    sol.g = g;
    sol.multiplicities = current;
    sol.lcm = 1;
    for (const auto& [d, n] : current) sol.lcm = std::lcm(sol.lcm, d);
    if (constrained) {
      auto it1 = current.find(1);
      auto it2 = current.find(2);
      if (it1 != current.end() && it1->second % 2 != 0) return;
      if (it2 != current.end() && it2->second % 2 != 0) return;
    }
    out.push_back(std::move(sol));
    return;
  }
  if (idx >= ds.size()) return;
  i64 d = ds[idx];
  i64 phi = euler_phi(d);
  for (i64 n = 0; n * phi <= budget; ++n) {
    if (n > 0) current[d] = n;
    enumerate_solutions(budget - n * phi, idx + 1, ds, current, out, g, constrained);
    if (n > 0) current.erase(d);
  }
}

}  // namespace

std::vector<TotientSolution> totient_solutions(i64 g, bool constrained) {
  if (g < 1 || g > 8) throw std::invalid_argument("totient_solutions: need 1 <= g <= 8");
  i64 budget = 2 * g;
  std::vector<i64> ds;
  for (i64 d = 1; d <= 3 * budget + 4; ++d)
    if (euler_phi(d) <= budget) ds.push_back(d);
  std::sort(ds.begin(), ds.end(), std::greater<>());
  std::vector<TotientSolution> out;
  std::map<i64, i64> current;
  enumerate_solutions(budget, 0, ds, current, out, g, constrained);
  std::sort(out.begin(), out.end(), [](const TotientSolution& a, const TotientSolution& b) {
    if (a.lcm != b.lcm) return a.lcm < b.lcm;
    return a.multiplicities < b.multiplicities;
  });
  return out;
}

i64 e_tilde(i64 g) {
  i64 best = 1;
  for (const TotientSolution& s : totient_solutions(g, false)) best = std::max(best, s.lcm);
  return best;
}

Int lucas_power_trace(const Int& tau, const Int& q, i64 m) {
  HVN_CHECK(m >= 0);
  if (m == 0) return 2;
  Int prev = 2, cur = tau;
  for (i64 i = 2; i <= m; ++i) {
    Int next = tau * cur - q * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<i64> ij_solutions(i64 ell, i64 e, i64 j) {
  HVN_CHECK(ell > 2 && is_prime(static_cast<u64>(ell)));
  i64 mod = ell - 1;
  std::vector<i64> out;
  i64 g = std::gcd(((e % mod) + mod) % mod, mod);
  if (g == 0) g = mod;
  if ((((j % mod) + mod) % mod) % g != 0) return out;
  for (i64 i = 0; i < mod; ++i)
    if (((e % mod) * i - j) % mod == 0) out.push_back(i);
  return out;
}

BalancedVerdict balanced_constraints(i64 ell, i64 e) {
  BalancedVerdict v;
  auto ord2 = [](i64 n) {
    int k = 0;
    while (n % 2 == 0) n /= 2, ++k;
    return k;
  };
  if (ord2(e) <= ord2(ell - 1)) {
    v.feasible = false;
    v.reasons.push_back("ord_2(e) <= ord_2(ell-1)");
  }
  if (e % 4 != 0) {
    v.feasible = false;
    v.reasons.push_back("4 does not divide e");
  }
  if (ell % 4 != 3) {
    v.feasible = false;
    v.reasons.push_back("ell != 3 mod 4");
  }
  if (e == 12 && ell % 12 != 11) {
    v.feasible = false;
    v.reasons.push_back("e = 12 needs ell == 11 mod 12");
  }
  return v;
}

namespace {

// Is there an integer tau == r (mod ell) with |tau| <= bound?
bool trace_exists(i64 r, i64 ell, i64 bound) {
  r %= ell;
  if (r < 0) r += ell;
  return r <= bound || ell - r <= bound;
}

i64 hasse_floor(i64 q) {
  // floor(2 sqrt q)
  i64 s = static_cast<i64>(std::sqrt(static_cast<double>(4 * q)));
  while ((s + 1) * (s + 1) <= 4 * q) ++s;
  while (s * s > 4 * q) --s;
  return s;
}

}  // namespace

std::vector<SievePair> nonbalanced_sieve(const SieveConfig& cfg) {
  if (cfg.p_bound < 11) throw std::invalid_argument("nonbalanced_sieve: p_bound must be >= 11");
  if (cfg.ell_min < 13) throw std::invalid_argument("nonbalanced_sieve: ell_min must be >= 13");
  static const std::vector<i64> kEValues = {1, 2, 3, 4, 6, 8, 12};
  std::vector<i64> ps = primes_up_to(cfg.p_bound);
  std::vector<i64> ells;
  for (i64 l : primes_up_to(cfg.ell_max))
    if (l >= cfg.ell_min) ells.push_back(l);

  std::vector<SievePair> out;
  for (i64 e : kEValues) {
    for (i64 j1 = 0; 2 * j1 < e; ++j1) {
      i64 j2 = e - j1;
      SievePair row{j1, j2, {}};
      for (i64 ell : ells) {
        if (j1 % std::gcd(e, ell - 1) != 0) continue;
        bool all_p_ok = true;
        for (i64 p : ps) {
          if (p == ell) continue;
          bool p_ok = false;
          for (int f = 1; f <= 2 && !p_ok; ++f) {
            i64 q = f == 1 ? p : p * p;
            i64 bound = hasse_floor(q);
            // q^j1 + q^j2 mod ell
            Int qi(static_cast<long>(q));
            Int ellz(static_cast<long>(ell));
            Int t1, t2;
            mpz_powm_ui(t1.get_mpz_t(), qi.get_mpz_t(), static_cast<unsigned long>(j1),
                        ellz.get_mpz_t());
            mpz_powm_ui(t2.get_mpz_t(), qi.get_mpz_t(), static_cast<unsigned long>(j2),
                        ellz.get_mpz_t());
            Int rhs = (t1 + t2) % ellz;
            for (i64 tau = -bound; tau <= bound && !p_ok; ++tau) {
              Int te = lucas_power_trace(Int(static_cast<long>(tau)), qi, e);
              if (((te - rhs) % ellz) == 0) p_ok = true;
            }
          }
          if (!p_ok) {
            all_p_ok = false;
            break;
          }
        }
        if (all_p_ok) row.ells.push_back(ell);
      }
      if (!row.ells.empty()) out.push_back(std::move(row));
    }
  }
  std::sort(out.begin(), out.end(), [](const SievePair& a, const SievePair& b) {
    if (a.j1 != b.j1) return a.j1 < b.j1;
    return a.j2 < b.j2;
  });
  return out;
}

std::vector<SievePair> refine_nonbalanced(const std::vector<SievePair>& table) {
  std::vector<SievePair> out;
  for (const SievePair& row : table) {
    i64 e = row.j1 + row.j2;
    SievePair kept{row.j1, row.j2, {}};
    for (i64 ell : row.ells) {
      // rows (0, 2h), h in {4, 6}: e(E/K; l) = h with e_l = 2 forces
      // n_h = 1, so ell == 1 mod h is impossible for a heavenly curve
      if (row.j1 == 0 && (row.j2 == 8 || row.j2 == 12)) {
        i64 h = row.j2 / 2;
        if (ell % h == 1) continue;
      }
      // joint Frobenius check at p in {2, 5}: some i1 with
      // e*i1 == j1 (mod ell-1) must admit Hasse-compatible traces
      // tau == q^i1 + q^(1-i1) for a norm choice at each p
      bool some_i_ok = false;
      for (i64 i1 : ij_solutions(ell, e, row.j1)) {
        bool all_p = true;
        for (i64 p : {2, 5}) {
          if (p == ell) continue;
          bool p_ok = false;
          for (int f = 1; f <= 2 && !p_ok; ++f) {
            i64 q = f == 1 ? p : p * p;
            i64 mod = ell - 1;
            i64 i2 = ((1 - i1) % mod + mod) % mod;
            u64 r = (powmod(static_cast<u64>(q % ell), static_cast<u64>(i1),
                            static_cast<u64>(ell)) +
                     powmod(static_cast<u64>(q % ell), static_cast<u64>(i2),
                            static_cast<u64>(ell))) %
                    static_cast<u64>(ell);
            if (trace_exists(static_cast<i64>(r), ell, hasse_floor(q))) p_ok = true;
          }
          if (!p_ok) {
            all_p = false;
            break;
          }
        }
        if (all_p) {
          some_i_ok = true;
          break;
        }
      }
      if (some_i_ok) kept.ells.push_back(ell);
    }
    if (!kept.ells.empty()) out.push_back(std::move(kept));
  }
  return out;
}

Int balanced_bound(i64 n, i64 g) {
  i64 exp = n * n * e_tilde(g) / 2;
  Int pow2 = Int(1) << static_cast<unsigned>(exp);
  return Int(static_cast<long>(g)) * (pow2 + 1) * (pow2 + 1);
}

Int prime_balance_bound(i64 g, i64 q, i64 e) {
  HVN_CHECK(g >= 1 && q >= 2 && e >= 1);
  Int qe;
  mpz_pow_ui(qe.get_mpz_t(), Int(static_cast<long>(q)).get_mpz_t(), static_cast<unsigned long>(e));
  // (q^(e/2) + 1)^2 = q^e + 2 q^(e/2) + 1, rounded up when e is odd
  Int mid;
  if (e % 2 == 0) {
    mpz_pow_ui(mid.get_mpz_t(), Int(static_cast<long>(q)).get_mpz_t(),
               static_cast<unsigned long>(e / 2));
    mid *= 2;
  } else {
    Int root = isqrt(qe);
    mid = 2 * root;
    if (root * root != qe) mid += 2;  // ceil(2 sqrt(q^e)) when not a square
  }
  return Int(static_cast<long>(g)) * (qe + mid + 1);
}

}  // namespace hvn
