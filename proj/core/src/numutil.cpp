#include "hvn/numutil.hpp"

#include <numeric>

namespace hvn {

void check_failed(const char* file, int line, const char* what) {
  throw std::logic_error(std::string("internal check failed at ") + file + ":" +
                         std::to_string(line) + ": " + what);
}

std::vector<i64> primes_up_to(i64 n) {
  std::vector<i64> out;
  if (n < 2) return out;
  std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
  for (i64 i = 2; i * i <= n; ++i)
    if (!comp[i])
      for (i64 j = i * i; j <= n; j += i) comp[j] = true;
  for (i64 i = 2; i <= n; ++i)
    if (!comp[i]) out.push_back(i);
  return out;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  i64 t = 0, newt = 1;
  i64 r = static_cast<i64>(m), newr = static_cast<i64>(a % m);
  while (newr != 0) {
    i64 q = r / newr;
    std::swap(t = t - q * newt, newt);
    std::swap(r = r - q * newr, newr);
  }
  HVN_CHECK(r == 1);
  return static_cast<u64>(t < 0 ? t + static_cast<i64>(m) : t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // This witness set is deterministic for all 64-bit inputs.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre(i64 a, i64 p) {
  HVN_CHECK(p > 2);
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  u64 r = powmod(static_cast<u64>(a), static_cast<u64>((p - 1) / 2), static_cast<u64>(p));
  return r == 1 ? 1 : -1;
}

int kronecker(const Int& a, const Int& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

int kronecker(i64 a, i64 n) {
  Int aa(static_cast<long>(a)), nn(static_cast<long>(n));
  return mpz_kronecker(aa.get_mpz_t(), nn.get_mpz_t());
}

std::optional<u64> sqrt_mod(u64 n, u64 p) {
  HVN_CHECK(p > 2 && is_prime(p));
  n %= p;
  if (n == 0) return 0;
  if (powmod(n, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(n, (p + 1) / 4, p);
  // Tonelli-Shanks, seeded with the least quadratic non-residue.
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) q >>= 1, ++s;
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = static_cast<u64>(s);
  u64 c = powmod(z, q, p);
  u64 t = powmod(n, q, p);
  u64 r = powmod(n, (q + 1) / 2, p);
  while (t != 1) {
    u64 t2 = t;
    u64 i = 0;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
      HVN_CHECK(i < m);
    }
    u64 b = c;
    for (u64 j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

bool is_squarefree(const Int& n) {
  Int m = abs(n);
  if (m == 0) return false;
  if (m == 1) return true;
  auto fac = factor(m);
  for (const auto& [p, e] : fac)
    if (e > 1) return false;
  return true;
}

std::pair<unsigned long, Int> remove_factor(const Int& n, const Int& p) {
  Int cof;
  unsigned long k = mpz_remove(cof.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return {k, cof};
}

std::map<Int, unsigned> factor(const Int& n, i64 bound) {
  HVN_CHECK(n != 0);
  std::map<Int, unsigned> out;
  Int m = abs(n);
  for (i64 p : {2, 3, 5}) {
    Int pp(static_cast<long>(p));
    auto [k, cof] = remove_factor(m, pp);
    if (k) out[pp] = static_cast<unsigned>(k);
    m = cof;
  }
  i64 p = 7;
  static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  int wi = 0;
  while (m > 1 && p <= bound && Int(p) * p <= m) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      Int pp(static_cast<long>(p));
      auto [k, cof] = remove_factor(m, pp);
      out[pp] = static_cast<unsigned>(k);
      m = cof;
    }
    p += wheel[wi];
    wi = (wi + 1) & 7;
  }
  if (m > 1) {
    if (Int(p) * p > m || mpz_probab_prime_p(m.get_mpz_t(), 40) > 0) {
      out[m] += 1;
    } else {
      throw std::domain_error("factor: composite cofactor above trial bound: " + m.get_str());
    }
  }
  return out;
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
  HVN_CHECK(n != 0);
  auto fac = factor(abs(n));
  Int d = n < 0 ? -1 : 1, s = 1;
  for (const auto& [p, e] : fac) {
    for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
    if (e & 1) d *= p;
  }
  return {d, s};
}

Int isqrt(const Int& n) {
  HVN_CHECK(n >= 0);
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rat& q) {
  return is_square(Int(q.get_num())) && is_square(Int(q.get_den()));
}

i64 euler_phi(i64 n) {
  HVN_CHECK(n >= 1);
  i64 result = n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

i64 lcm_i64(i64 a, i64 b) { return std::lcm(a, b); }

std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace hvn
