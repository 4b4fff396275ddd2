#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "doctest.h"
#include "hvn/congruence.hpp"

using namespace hvn;

namespace {

// Independent enumeration of max lcm over lists with sum phi(d_i) = 2g:
// DFS over nondecreasing d-sequences (a different code path from the
// multiplicity-map enumeration in the library).
i64 brute_e_tilde(i64 g) {
  i64 target = 2 * g;
  i64 best = 1;
  std::vector<i64> ds;
  for (i64 d = 1; d <= 100; ++d)
    if (euler_phi(d) <= target) ds.push_back(d);
  std::function<void(i64, size_t, i64)> rec = [&](i64 left, size_t lo, i64 cur) {
    if (left == 0) {
      best = std::max(best, cur);
      return;
    }
    for (size_t i = lo; i < ds.size(); ++i) {
      i64 phi = euler_phi(ds[i]);
      if (phi <= left) rec(left - phi, i, std::lcm(cur, ds[i]));
    }
  };
  rec(target, 0, 1);
  return best;
}

}  // namespace

TEST_CASE("totient solutions g = 1") {
  auto sols = totient_solutions(1, true);
  std::set<i64> lcms;
  for (const auto& s : sols) {
    i64 total = 0;
    for (const auto& [d, n] : s.multiplicities) total += n * euler_phi(d);
    CHECK(total == 2);
    lcms.insert(s.lcm);
  }
  CHECK(lcms == std::set<i64>{1, 2, 3, 4, 6});
  // one solution with n_3 = 1 has lcm 3
  bool found = false;
  for (const auto& s : sols) {
    auto it = s.multiplicities.find(3);
    if (it != s.multiplicities.end() && it->second == 1 && s.lcm == 3) found = true;
  }
  CHECK(found);
}

TEST_CASE("e_tilde against brute-force oracle") {
  CHECK(e_tilde(1) == 6);
  CHECK(e_tilde(2) == 12);
  CHECK(e_tilde(3) == 30);
  for (i64 g = 1; g <= 5; ++g) CHECK(e_tilde(g) == brute_e_tilde(g));
  CHECK(e_tilde(1) >= 2);
  for (i64 g = 1; g <= 8; ++g) CHECK(e_tilde(g) >= 2 * g);
  CHECK_THROWS_AS(totient_solutions(9, false), std::invalid_argument);
}

TEST_CASE("lucas power trace") {
  CHECK(lucas_power_trace(3, 5, 2) == -1);
  CHECK(lucas_power_trace(3, 5, 3) == -18);
  CHECK(lucas_power_trace(123, 456, 0) == 2);

  // floating-point cross-check: alpha^m + beta^m for |tau| <= 2 sqrt(q)
  for (i64 q = 2; q <= 100; q += 7) {
    i64 bound = static_cast<i64>(2 * std::sqrt(static_cast<double>(q)));
    for (i64 tau = -bound; tau <= bound; ++tau) {
      double disc = static_cast<double>(tau) * tau - 4.0 * q;
      for (i64 m = 0; m <= 12; ++m) {
        double expect;
        if (disc >= 0) {
          double r = std::sqrt(disc);
          expect = std::pow((tau + r) / 2, m) + std::pow((tau - r) / 2, m);
        } else {
          // complex conjugate roots: 2 * q^(m/2) * cos(m * theta)
          double theta = std::atan2(std::sqrt(-disc), static_cast<double>(tau));
          expect = 2.0 * std::pow(static_cast<double>(q), m / 2.0) * std::cos(m * theta);
        }
        double got = lucas_power_trace(tau, q, m).get_d();
        // relative to the natural magnitude q^(m/2): the power sum itself
        // passes through zero where a ratio to |expect| degenerates
        double scale = std::max(1.0, std::pow(static_cast<double>(q), m / 2.0));
        CHECK(std::abs(got - expect) / scale < 1e-6);
      }
    }
  }
}

TEST_CASE("ij solutions") {
  CHECK(ij_solutions(29, 12, 4) == std::vector<i64>{5, 12, 19, 26});
  auto sols = ij_solutions(47, 12, 6);
  CHECK(std::count(sols.begin(), sols.end(), 12) == 1);  // (47+1)/4
  CHECK(std::count(sols.begin(), sols.end(), 35) == 1);  // (3*47-1)/4
  CHECK(ij_solutions(13, 1, 7) == std::vector<i64>{7});
  CHECK(ij_solutions(13, 4, 1).empty());  // gcd(4,12) does not divide 1
}

TEST_CASE("balanced constraints") {
  CHECK(balanced_constraints(11, 4).feasible);
  CHECK_FALSE(balanced_constraints(13, 4).feasible);
  CHECK(balanced_constraints(23, 12).feasible);
  CHECK_FALSE(balanced_constraints(13, 12).feasible);  // 13 != 11 mod 12
  CHECK_FALSE(balanced_constraints(11, 6).feasible);   // 4 does not divide 6
}

TEST_CASE("nonbalanced sieve reproduces the six surviving rows") {
  auto table = nonbalanced_sieve();
  REQUIRE(table.size() == 6);
  auto row = [&](i64 j1, i64 j2) -> const SievePair& {
    for (const auto& r : table)
      if (r.j1 == j1 && r.j2 == j2) return r;
    static SievePair missing;
    REQUIRE(false);
    return missing;
  };
  CHECK(row(0, 3).ells == std::vector<i64>{13, 19, 37});
  CHECK(row(0, 4).ells == std::vector<i64>{13});
  CHECK(row(0, 6).ells == std::vector<i64>{13, 19, 37});
  CHECK(row(0, 8).ells == std::vector<i64>{13, 17});
  CHECK(row(0, 12).ells == std::vector<i64>{13, 19, 37});
  CHECK(row(4, 8).ells == std::vector<i64>{29});
  for (const auto& r : table) {
    CHECK(r.j1 < r.j2);  // non-balanced by construction
    for (i64 l : r.ells) CHECK(l <= 37);
  }
}

TEST_CASE("sieve monotone in p_bound") {
  SieveConfig big;
  big.p_bound = 13;
  auto smaller = nonbalanced_sieve();
  auto larger = nonbalanced_sieve(big);
  // survivors with p <= 13 are a subset of survivors with p <= 11
  for (const auto& rl : larger) {
    bool found = false;
    for (const auto& rs : smaller) {
      if (rs.j1 == rl.j1 && rs.j2 == rl.j2) {
        found = true;
        for (i64 l : rl.ells) CHECK(std::count(rs.ells.begin(), rs.ells.end(), l) == 1);
      }
    }
    CHECK(found);
  }
}

TEST_CASE("refinement leaves ell in {13,19}, e in {3,6}, j1 = 0") {
  auto refined = refine_nonbalanced(nonbalanced_sieve());
  REQUIRE(!refined.empty());
  for (const auto& r : refined) {
    CHECK(r.j1 == 0);
    i64 e = r.j1 + r.j2;
    CHECK((e == 3 || e == 6));
    for (i64 l : r.ells) CHECK((l == 13 || l == 19));
  }
  // the (0,4)@13 and (4,8)@29 rows must be gone entirely
  for (const auto& r : refined) {
    CHECK(!(r.j1 == 0 && r.j2 == 4));
    CHECK(!(r.j1 == 4 && r.j2 == 8));
  }
}

TEST_CASE("balanced bounds") {
  CHECK(balanced_bound(1, 1) == 81);
  CHECK(balanced_bound(2, 1) == 16785409);
  CHECK(balanced_bound(1, 1) >= 11);
  Int prev = 0;
  for (i64 n = 1; n <= 4; ++n) {
    Int b = balanced_bound(n, 1);
    CHECK(b > prev);
    prev = b;
  }
  CHECK(prime_balance_bound(1, 2, 12) == 4225);
  CHECK(prime_balance_bound(1, 4, 6) == 4225);
  CHECK(prime_balance_bound(2, 3, 4) == 200);
}
