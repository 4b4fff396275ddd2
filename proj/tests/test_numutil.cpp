#include "doctest.h"
#include "hvn/numutil.hpp"

using namespace hvn;

TEST_CASE("primes and primality") {
  auto ps = primes_up_to(30);
  CHECK(ps == std::vector<i64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(is_prime(2));
  CHECK(is_prime(47));
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));  // Carmichael
}

TEST_CASE("modular arithmetic") {
  CHECK(powmod(3, 100, 101) == 1);
  CHECK(invmod(7, 13) == 2);
  CHECK(mulmod(1ull << 40, 1ull << 40, (1ull << 61) - 1) == powmod(2, 80, (1ull << 61) - 1));
}

TEST_CASE("legendre and kronecker") {
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(legendre(0, 13) == 0);
  CHECK(kronecker(i64(5), i64(11)) == 1);
  CHECK(kronecker(i64(24), i64(7)) == -1);
  CHECK(kronecker(i64(5), i64(5)) == 0);
}

TEST_CASE("sqrt_mod") {
  auto r = sqrt_mod(2, 7);
  REQUIRE(r.has_value());
  CHECK(mulmod(*r, *r, 7) == 2);
  CHECK_FALSE(sqrt_mod(3, 7).has_value());
  // 2^s-heavy prime exercises the Tonelli-Shanks loop
  auto r2 = sqrt_mod(5, 12289);
  REQUIRE(r2.has_value());
  CHECK(mulmod(*r2, *r2, 12289) == 5);
}

TEST_CASE("factor and squarefree") {
  auto f = factor(Int(-3528));  // 2^3 3^2 7^2
  CHECK(f[Int(2)] == 3);
  CHECK(f[Int(3)] == 2);
  CHECK(f[Int(7)] == 2);
  CHECK(is_squarefree(Int(30)));
  CHECK_FALSE(is_squarefree(Int(12)));
  auto [d, s] = squarefree_decompose(Int(4500));  // 2^2 3^2 5^3
  CHECK(d == 5);
  CHECK(s == 30);
  auto [dn, sn] = squarefree_decompose(Int(-8));
  CHECK(dn == -2);
  CHECK(sn == 2);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
}
