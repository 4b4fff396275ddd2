#include "doctest.h"
#include "hvn/rng.hpp"
#include "hvn/scarcity.hpp"

using namespace hvn;

TEST_CASE("least square roots mod ell") {
  auto r = least_sqrt_mod(2, 7);
  REQUIRE(r.has_value());
  CHECK(*r == 3);
  auto r8 = least_sqrt_mod(8, 47);
  REQUIRE(r8.has_value());
  CHECK(*r8 == 14);
  CHECK_FALSE(least_sqrt_mod(3, 7).has_value());
  CHECK_THROWS_AS(least_sqrt_mod(14, 7), std::invalid_argument);

  // minimality by scan, random instances
  Rng rng(99);
  int done = 0;
  while (done < 200) {
    i64 ell = 3 + 2 * static_cast<i64>(rng.uniform(200));
    if (!is_prime(static_cast<u64>(ell))) continue;
    i64 N = 1 + static_cast<i64>(rng.uniform(1000));
    if (N % ell == 0) continue;
    ++done;
    auto root = least_sqrt_mod(N, ell);
    if (!root.has_value()) continue;
    CHECK((*root * *root - N) % ell == 0);
    for (i64 s = 1; s < *root; ++s) CHECK((s * s - N) % ell != 0);
  }
}

TEST_CASE("n_set values") {
  CHECK(n_set(47) == std::vector<i64>{2, 3, 7, 17, 37, 53, 97});
  CHECK(n_set(103).size() == 23);
  for (i64 ell : {7, 23, 47, 103}) {
    for (i64 p : n_set(ell)) CHECK(p <= ell * ell / 16);
  }
  CHECK_THROWS_AS(n_set(5), std::invalid_argument);

  // membership re-verified by exhaustive square scan
  for (i64 ell : {31, 47}) {
    auto ns = n_set(ell);
    for (i64 p : primes_up_to(ell * ell / 16)) {
      if (p == ell) continue;
      bool in = std::count(ns.begin(), ns.end(), p) == 1;
      // exhaustive: find least r with r^2 == 4p mod ell
      i64 least = 0;
      for (i64 s = 1; s < ell; ++s)
        if ((s * s - 4 * p) % ell == 0) {
          least = s;
          break;
        }
      bool expect = least != 0 && least * least > 4 * p && legendre(p, ell) == 1;
      CHECK(in == expect);
    }
  }
}

TEST_CASE("vertical sieve") {
  auto surv = vertical_sieve(47, 2500, true);
  // the first allowed fields: disc 5, then nothing until 2309 (2477 also
  // passes: all seven set primes are inert there)
  REQUIRE(surv.size() >= 2);
  CHECK(surv[0] == 5);
  CHECK(surv[1] == 2309);
  CHECK(surv == std::vector<i64>{5, 2309, 2477});
  CHECK(vertical_sieve(47, 4, true).empty());
  // survivors never have a split witness
  for (i64 disc : surv)
    for (i64 p : n_set(47)) CHECK(kronecker(disc, p) != 1);
}

TEST_CASE("vertical sieve finds nothing for ell = 103 below 10^6") {
  CHECK(vertical_sieve(103, 1000000, true).empty());
}

TEST_CASE("horizontal sieve for Q(sqrt 7)") {
  auto res = horizontal_sieve(7, 164, 200000, 250);
  CHECK(res.survivors.empty());
  REQUIRE(res.split_primes.size() >= 3);
  CHECK(res.split_primes[0] == 3);
  CHECK(res.split_primes[1] == 19);
  CHECK(res.split_primes[2] == 29);
  CHECK(res.split_primes.back() == 233);

  auto low = horizontal_sieve(7, 5, 163, 250);
  CHECK(!low.survivors.empty());
  for (i64 ell : low.survivors) {
    // no split p with 4p < ell and (p/ell) = 1
    for (i64 p : low.split_primes)
      if (4 * p < ell) CHECK(legendre(p, ell) != 1);
  }

  // monotone in p_cap: raising the cap can only remove survivors
  auto wide = horizontal_sieve(7, 5, 163, 500);
  for (i64 ell : wide.survivors)
    CHECK(std::count(low.survivors.begin(), low.survivors.end(), ell) == 1);
}
