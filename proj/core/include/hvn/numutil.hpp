#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hvn {

using Int = mpz_class;
using Rat = mpq_class;
using i64 = std::int64_t;
using u64 = std::uint64_t;

// Internal invariant failure: always-on, throws std::logic_error.
[[noreturn]] void check_failed(const char* file, int line, const char* what);
#define HVN_CHECK(cond)                                          \
  do {                                                           \
    if (!(cond)) ::hvn::check_failed(__FILE__, __LINE__, #cond); \
  } while (0)

std::vector<i64> primes_up_to(i64 n);
bool is_prime(u64 n);  // deterministic Miller-Rabin for 64-bit

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u64 invmod(u64 a, u64 m);  // m prime or gcd(a,m)=1

// Legendre symbol (a/p) for odd prime p.
int legendre(i64 a, i64 p);
// Kronecker symbol (a/n), full generality.
int kronecker(const Int& a, const Int& n);
int kronecker(i64 a, i64 n);

// Tonelli-Shanks: a square root of n mod odd prime p, or nullopt when
// (n/p) = -1. Deterministic (smallest non-residue used internally).
std::optional<u64> sqrt_mod(u64 n, u64 p);

bool is_squarefree(const Int& n);
// Largest k with p^k | n, plus n / p^k.
std::pair<unsigned long, Int> remove_factor(const Int& n, const Int& p);

// Prime factorization by trial division up to `bound`, then a primality
// check on the cofactor. Throws std::domain_error if the cofactor is
// composite and exceeds the bound (incomplete factorization).
std::map<Int, unsigned> factor(const Int& n, i64 bound = 1000000);

// n = s^2 * d with d squarefree (n != 0). Returns (d, s).
std::pair<Int, Int> squarefree_decompose(const Int& n);

Int isqrt(const Int& n);
bool is_square(const Int& n);
bool is_square(const Rat& q);

i64 euler_phi(i64 n);
i64 lcm_i64(i64 a, i64 b);

std::string to_string(const Int& n);

}  // namespace hvn
