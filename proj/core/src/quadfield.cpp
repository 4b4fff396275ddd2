#include "hvn/quadfield.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

namespace hvn {

namespace {

i64 mod4(i64 d) { return ((d % 4) + 4) % 4; }

Rat rat(i64 n) { return Rat(static_cast<long>(n)); }

}  // namespace

std::string QuadField::m_poly_string() const {
  std::ostringstream os;
  if (basis_kind == BasisKind::HalfBasis) {
    i64 c = (d - 1) / 4;
    os << "T^2 - T " << (c >= 0 ? "- " : "+ ") << (c >= 0 ? c : -c);
  } else {
    os << "T^2 " << (d >= 0 ? "- " : "+ ") << (d >= 0 ? d : -d);
  }
  return os.str();
}

QuadField make_field(i64 d) {
  if (d == 0 || d == 1) throw std::invalid_argument("make_field: d must not be 0 or 1");
  if (!is_squarefree(Int(static_cast<long>(d))))
    throw std::invalid_argument("make_field: d must be squarefree");
  QuadField K;
  K.d = d;
  if (mod4(d) == 1) {
    K.disc = d;
    K.basis_kind = BasisKind::HalfBasis;
  } else {
    K.disc = 4 * d;
    K.basis_kind = BasisKind::SqrtBasis;
  }
  return K;
}

Rat FieldElem::norm() const {
  return x * x + x * y * rat(K.tr_omega()) + y * y * rat(K.nm_omega());
}

Rat FieldElem::trace() const { return 2 * x + y * rat(K.tr_omega()); }

FieldElem FieldElem::conj() const {
  return FieldElem(K, x + y * rat(K.tr_omega()), -y);
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  HVN_CHECK(K == o.K);
  return FieldElem(K, x + o.x, y + o.y);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  HVN_CHECK(K == o.K);
  return FieldElem(K, x - o.x, y - o.y);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  HVN_CHECK(K == o.K);
  // w^2 = tr*w - nm
  Rat t = rat(K.tr_omega()), n = rat(K.nm_omega());
  Rat yy = y * o.y;
  return FieldElem(K, x * o.x - n * yy, x * o.y + y * o.x + t * yy);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  HVN_CHECK(K == o.K);
  Rat n = o.norm();
  if (n == 0) throw std::domain_error("FieldElem: division by zero");
  FieldElem num = *this * o.conj();
  return FieldElem(K, num.x / n, num.y / n);
}

FieldElem FieldElem::pow(unsigned e) const {
  FieldElem r = elem(K, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string FieldElem::str() const {
  std::ostringstream os;
  if (y == 0) {
    os << x;
  } else {
    if (x != 0) os << x << (y > 0 ? " + " : " - ");
    else if (y < 0) os << "-";
    Rat ay = abs(y);
    if (ay != 1) os << ay << "*";
    os << "w";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& v) { return os << v.str(); }

FieldElem elem(const QuadField& K, i64 x, i64 y) { return FieldElem(K, rat(x), rat(y)); }
FieldElem elem(const QuadField& K, const Rat& x, const Rat& y) { return FieldElem(K, x, y); }

FieldElem sqrt_d(const QuadField& K) {
  if (K.basis_kind == BasisKind::HalfBasis) return elem(K, -1, 2);  // 2w - 1
  return elem(K, 0, 1);
}

std::optional<FieldElem> field_sqrt(const FieldElem& v) {
  const QuadField& K = v.K;
  if (v.is_zero()) return elem(K, 0);
  Rat N = v.norm();
  if (!is_square(N)) return std::nullopt;
  // t^2 solves Dm*T^2 - 2*trace*T + y^2 = 0 where Dm = disc(m) = tr^2 - 4*nm.
  Rat Dm = rat(K.tr_omega() * K.tr_omega() - 4 * K.nm_omega());
  Rat sqN(isqrt(Int(N.get_num())), isqrt(Int(N.get_den())));
  for (int sign : {+1, -1}) {
    Rat T = (v.trace() + 2 * sign * sqN) / Dm;
    if (T == 0) {
      if (v.y != 0) continue;
      // v rational: rational square root or t*sqrt(d)-type root
      if (is_square(v.x)) {
        Rat r(isqrt(Int(v.x.get_num())), isqrt(Int(v.x.get_den())));
        FieldElem cand = elem(K, r, Rat(0));
        if (cand * cand == v) return cand;
      }
      continue;
    }
    if (T < 0 || !is_square(T)) continue;
    Rat t(isqrt(Int(T.get_num())), isqrt(Int(T.get_den())));
    if (t == 0) continue;
    Rat s = (v.y - rat(K.tr_omega()) * t * t) / (2 * t);
    FieldElem cand(K, s, t);
    if (cand * cand == v) return cand;
  }
  // Pure rational square root of a rational value.
  if (v.y == 0 && is_square(v.x)) {
    Rat r(isqrt(Int(v.x.get_num())), isqrt(Int(v.x.get_den())));
    FieldElem cand = elem(K, r, Rat(0));
    if (cand * cand == v) return cand;
  }
  return std::nullopt;
}

int embedding_sign(const FieldElem& v, bool conjugate) {
  const QuadField& K = v.K;
  if (!K.is_real()) throw std::domain_error("embedding_sign: field is imaginary");
  // v = a + b*sqrt(d)
  Rat a = v.x, b = v.y;
  if (K.basis_kind == BasisKind::HalfBasis) {
    a = v.x + v.y / 2;
    b = v.y / 2;
  }
  if (conjugate) b = -b;
  if (b == 0) return a > 0 ? 1 : (a == 0 ? 0 : -1);
  if (a == 0) return b > 0 ? 1 : -1;
  if (a > 0 && b > 0) return 1;
  if (a < 0 && b < 0) return -1;
  Rat lhs = a * a, rhs = b * b * rat(K.d);
  if (a > 0) return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
  return rhs > lhs ? 1 : (lhs == rhs ? 0 : -1);
}

int compare_embedding(const FieldElem& v, const Rat& c) {
  return embedding_sign(v - elem(v.K, c, Rat(0)));
}

std::vector<PrimeOfK> split_prime(const QuadField& K, i64 p) {
  if (p < 2 || !is_prime(static_cast<u64>(p)))
    throw std::invalid_argument("split_prime: p must be prime");
  int kr = kronecker(K.disc, p);
  std::vector<PrimeOfK> out;
  if (kr == -1) {
    out.push_back({p, 1, 2, 0});
    return out;
  }
  if (kr == 0) {
    // ramified; double root of m(T) mod p
    u64 root;
    if (p == 2) {
      root = mod4(K.d) == 3 ? 1 : 0;
    } else if (K.basis_kind == BasisKind::HalfBasis) {
      root = (static_cast<u64>(p) + 1) / 2;  // tr/2 = 1/2 mod p
    } else {
      root = 0;
    }
    out.push_back({p, 2, 1, root});
    return out;
  }
  // split
  u64 r1, r2;
  if (p == 2) {
    r1 = 0;
    r2 = 1;
  } else {
    u64 dm = static_cast<u64>(((K.d % p) + p) % p);
    auto s = sqrt_mod(dm, static_cast<u64>(p));
    HVN_CHECK(s.has_value());
    u64 sv = *s;
    if (K.basis_kind == BasisKind::HalfBasis) {
      u64 i2 = invmod(2, static_cast<u64>(p));
      r1 = mulmod((1 + sv) % p, i2, p);
      r2 = mulmod((1 + p - sv) % p, i2, p);
    } else {
      r1 = sv;
      r2 = (p - sv) % p;
    }
    if (r1 > r2) std::swap(r1, r2);
  }
  out.push_back({p, 1, 1, r1});
  out.push_back({p, 1, 1, r2});
  return out;
}

namespace {

// Numerator/denominator form u + v*w over den, gcd(u, v, den) = 1, den > 0.
struct IntegralForm {
  Int u, v, den;
};

IntegralForm integral_form(const FieldElem& e) {
  Int dx = e.x.get_den(), dy = e.y.get_den();
  Int den;
  mpz_lcm(den.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
  Int u = Int(e.x.get_num()) * (den / dx);
  Int v = Int(e.y.get_num()) * (den / dy);
  Int g;
  mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    u /= g;
    v /= g;
    den /= g;
  }
  return {u, v, den};
}

// Hensel-lifted root of m(T) mod p^k for a split/ramified-free prime.
// Thread-local cache keyed by (d, p, root).
struct LiftedRoot {
  Int modulus;  // p^k
  Int root;
  unsigned k = 0;
};

LiftedRoot& lifted_root(const QuadField& K, const PrimeOfK& P, unsigned min_k) {
  thread_local std::map<std::tuple<i64, i64, u64>, LiftedRoot> cache;
  auto key = std::make_tuple(K.d, P.p, P.root);
  LiftedRoot& lr = cache[key];
  Int p(static_cast<long>(P.p));
  if (lr.k == 0) {
    lr.root = Int(static_cast<unsigned long>(P.root));
    lr.modulus = p;
    lr.k = 1;
  }
  Int tr(static_cast<long>(K.tr_omega())), nm(static_cast<long>(K.nm_omega()));
  while (lr.k < min_k) {
    unsigned new_k = std::min(lr.k * 2, min_k > lr.k * 2 ? min_k : lr.k * 2);
    Int new_mod;
    mpz_pow_ui(new_mod.get_mpz_t(), p.get_mpz_t(), new_k);
    // Newton: r <- r - m(r)/m'(r) mod p^new_k
    Int r = lr.root;
    Int mr = ((r * r - tr * r + nm) % new_mod + new_mod) % new_mod;
    Int dr = ((2 * r - tr) % new_mod + new_mod) % new_mod;
    Int inv;
    int ok = mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), new_mod.get_mpz_t());
    HVN_CHECK(ok != 0);
    r = ((r - mr * inv) % new_mod + new_mod) % new_mod;
    lr.root = r;
    lr.modulus = new_mod;
    lr.k = new_k;
  }
  return lr;
}

unsigned long vp(const Int& n, i64 p) {
  HVN_CHECK(n != 0);
  Int cof;
  return mpz_remove(cof.get_mpz_t(), n.get_mpz_t(), Int(static_cast<long>(p)).get_mpz_t());
}

}  // namespace

int valuation(const Rat& r, i64 p) {
  if (r == 0) return kValInfinity;
  long vn = static_cast<long>(vp(Int(r.get_num()), p));
  long vd = static_cast<long>(vp(Int(r.get_den()), p));
  return static_cast<int>(vn - vd);
}

int valuation(const FieldElem& e, const PrimeOfK& P) {
  if (e.is_zero()) return kValInfinity;
  auto [u, v, den] = integral_form(e);
  long den_val = den == 1 ? 0 : static_cast<long>(vp(den, P.p));
  long num_val;
  if (P.f == 2) {
    // inert: p stays prime, valuation is the p-adic content
    if (u == 0) {
      num_val = static_cast<long>(vp(v, P.p));
    } else if (v == 0) {
      num_val = static_cast<long>(vp(u, P.p));
    } else {
      num_val = static_cast<long>(std::min(vp(u, P.p), vp(v, P.p)));
    }
  } else if (P.ramified()) {
    Int t(static_cast<long>(e.K.tr_omega())), n(static_cast<long>(e.K.nm_omega()));
    Int norm = u * u + t * u * v + n * v * v;
    HVN_CHECK(norm != 0);
    num_val = static_cast<long>(vp(norm, P.p));
  } else {
    // split: p-adic embedding via the Hensel-lifted root
    unsigned k = 32;
    for (;;) {
      LiftedRoot& lr = lifted_root(e.K, P, k);
      Int a = ((u + v * lr.root) % lr.modulus + lr.modulus) % lr.modulus;
      if (a == 0) {
        k *= 2;
        continue;
      }
      unsigned long val = vp(a, P.p);
      if (val >= lr.k) {
        k = lr.k * 2;
        continue;
      }
      num_val = static_cast<long>(val);
      break;
    }
  }
  return static_cast<int>(num_val - P.e * den_val);
}

FqElem omega_image(const QuadField& K, const PrimeOfK& P) {
  Fq F(P.p, P.f);
  if (P.f == 1) return F.make(P.root);
  if (P.p == 2) {
    // half basis, m(T) = T^2 + T + 1 mod 2; t is a root
    HVN_CHECK(K.basis_kind == BasisKind::HalfBasis);
    return F.make(0, 1);
  }
  u64 p = static_cast<u64>(P.p);
  u64 dm = static_cast<u64>(((K.d % P.p) + P.p) % P.p);
  // sqrt(d) = s*t with s^2 = d / s0 mod p (t^2 = s0, both non-residues).
  u64 s0 = F.modulus_s0();
  auto s = sqrt_mod(mulmod(dm, invmod(s0, p), p), p);
  HVN_CHECK(s.has_value());
  if (K.basis_kind == BasisKind::HalfBasis) {
    u64 i2 = invmod(2, p);
    return F.make(i2, mulmod(*s, i2, p));
  }
  return F.make(0, *s);
}

FieldElem lift_residue(const QuadField& K, const PrimeOfK& P, const FqElem& r) {
  if (P.f == 1) return elem(K, static_cast<i64>(r.a), 0);
  FqElem w = omega_image(K, P);
  HVN_CHECK(w.b != 0);
  u64 p = static_cast<u64>(P.p);
  u64 inv_b = invmod(w.b, p);
  // t = (w - w.a) * inv_b, so  c0 + c1*t  lifts to  (c0 - c1*w.a*inv_b) + c1*inv_b*w
  u64 x = (r.a + mulmod(mulmod(r.b, inv_b, p), p - w.a % p, p)) % p;
  u64 y = mulmod(r.b, inv_b, p);
  FieldElem out = elem(K, static_cast<i64>(x), static_cast<i64>(y));
  HVN_CHECK(residue(out, P) == r);
  return out;
}

FqElem residue(const FieldElem& e, const PrimeOfK& P) {
  Fq F(P.p, P.f);
  auto [u, v, den] = integral_form(e);
  u64 p = static_cast<u64>(P.p);
  unsigned long den_val = den == 1 ? 0 : vp(den, P.p);
  if (den_val == 0) {
    Int pp(static_cast<long>(P.p));
    Int um = ((u % pp) + pp) % pp;
    Int vm = ((v % pp) + pp) % pp;
    u64 wden = invmod(mpz_fdiv_ui(den.get_mpz_t(), p), p);
    FqElem w = omega_image(e.K, P);
    FqElem val = F.add(F.make(um.get_ui()), F.mul(F.make(vm.get_ui()), w));
    return F.mul(val, F.make(wden));
  }
  if (P.f == 2 || P.ramified())
    throw std::domain_error("residue: negative valuation at prime above " + std::to_string(P.p));
  // split prime with p in the denominator: use the p-adic embedding
  unsigned need = static_cast<unsigned>(den_val) + 2;
  for (;;) {
    LiftedRoot& lr = lifted_root(e.K, P, std::max(need, 8u));
    if (lr.k < need) {
      need = lr.k + 1;
      continue;
    }
    Int a = ((u + v * lr.root) % lr.modulus + lr.modulus) % lr.modulus;
    Int pt;
    mpz_pow_ui(pt.get_mpz_t(), Int(static_cast<long>(P.p)).get_mpz_t(), den_val);
    if (a != 0 && vp(a, P.p) < den_val)
      throw std::domain_error("residue: negative valuation at prime above " + std::to_string(P.p));
    if (a == 0 && lr.k <= den_val) {
      need = lr.k * 2;
      continue;
    }
    Int num = (a / pt) % Int(static_cast<long>(P.p));
    Int d0 = den / pt;
    u64 wden = invmod(mpz_fdiv_ui(d0.get_mpz_t(), p), p);
    return F.make(mulmod(num.get_ui(), wden, p));
  }
}

FieldElem uniformizer(const QuadField& K, const PrimeOfK& P) {
  if (P.f == 2) return elem(K, P.p, 0);
  if (P.ramified()) {
    if (P.p == 2 && mod4(K.d) == 3) return elem(K, 1, 1);  // 1 + sqrt(d)
    return sqrt_d(K);
  }
  // split: w - r, with the lift of r adjusted so the norm has valuation 1
  for (u64 shift : {0ul, 1ul}) {
    FieldElem pi = elem(K, -static_cast<i64>(P.root + shift * static_cast<u64>(P.p)), 1);
    Int norm_num(pi.norm().get_num());
    if (vp(norm_num, P.p) == 1) {
      HVN_CHECK(valuation(pi, P) == 1);
      return pi;
    }
  }
  HVN_CHECK(false);
}

FieldElem fundamental_unit(const QuadField& K) {
  if (!K.is_real()) throw std::domain_error("fundamental_unit: field is imaginary");
  // Continued fraction of w; the period matrix eigenvalue is the unit.
  Int D(static_cast<long>(K.d));
  Int sq = isqrt(D);
  Int P0, Q0;
  if (K.basis_kind == BasisKind::HalfBasis) {
    P0 = 1;
    Q0 = 2;
  } else {
    P0 = 0;
    Q0 = 1;
  }
  // State (P, Q) with alpha = (P + sqrt(D)) / Q.
  std::map<std::pair<Int, Int>, int> seen;
  std::vector<Int> h{0, 1}, k{1, 0};  // h[n+2] = h_n, h_{-2} = 0, h_{-1} = 1
  std::vector<std::pair<Int, Int>> states;
  Int P = P0, Q = Q0;
  int n0 = -1, n1 = -1;
  for (int n = 0; n < 100000; ++n) {
    HVN_CHECK(Q != 0);
    Int a = (P + sq);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), Q.get_mpz_t());
    h.push_back(q * h[h.size() - 1] + h[h.size() - 2]);
    k.push_back(q * k[k.size() - 1] + k[k.size() - 2]);
    Int Pn = q * Q - P;
    Int Qn = (D - Pn * Pn) / Q;
    HVN_CHECK((D - Pn * Pn) % Q == 0);
    P = Pn;
    Q = Qn;
    auto state = std::make_pair(P, Q);
    auto it = seen.find(state);
    if (it != seen.end()) {
      n0 = it->second;
      n1 = n + 1;
      break;
    }
    seen[state] = n + 1;
    states.push_back(state);
  }
  HVN_CHECK(n0 >= 1 && n1 > n0);
  // M(0..n-1) = [[h[n+1], h[n]], [k[n+1], k[n]]]; the period block is
  // M(0..n0-1)^-1 * M(0..n1-1), determinant +-1.
  Int A = h[n0 + 1], B = h[n0], C = k[n0 + 1], E = k[n0];
  Int det = A * E - B * C;  // +-1
  Int A1 = h[n1 + 1], B1 = h[n1], C1 = k[n1 + 1], E1 = k[n1];
  // inverse of [[A,B],[C,E]] is det * [[E,-B],[-C,A]]
  Int kp = det * (-C * A1 + A * C1);   // lower-left of the period matrix
  Int kpp = det * (-C * B1 + A * E1);  // lower-right
  // eigenvalue: kp * alpha_{n0} + kpp, where alpha_{n0} = (P + sqrt(D))/Q
  const auto& [Pa, Qa] = states[static_cast<size_t>(n0 - 1)];
  Rat aa = Rat(kp * Pa + kpp * Qa) / Rat(Qa);
  Rat bb = Rat(kp) / Rat(Qa);
  FieldElem eta = elem(K, aa, Rat(0)) + sqrt_d(K) * bb;
  HVN_CHECK(eta.is_integral() && eta.is_unit());
  // normalize to the smallest unit > 1: of {eta, -eta, 1/eta, -1/eta}
  FieldElem inv = elem(K, 1) / eta;
  for (const FieldElem& cand : {eta, -eta, inv, -inv}) {
    if (compare_embedding(cand, Rat(1)) > 0 && compare_embedding(cand * cand, Rat(1)) > 0) {
      FieldElem c2 = cand;
      // the four candidates contain exactly one with both embeddings... pick >1 minimal:
      // |N|=1 makes exactly one of {eta,-eta,inv,-inv} greater than 1 unless eta=+-1.
      return c2;
    }
  }
  HVN_CHECK(false);
}

namespace {

// Elements of O_K with |norm| = n, up to sign and unit multiples (real case
// reduced modulo the fundamental unit), in a deterministic order.
std::vector<FieldElem> norm_solutions(const QuadField& K, const Int& n, i64 budget = 40000000) {
  std::vector<FieldElem> out;
  HVN_CHECK(n > 0);
  if (!K.is_real()) {
    // positive definite: x^2 + t x y + nm y^2 = n
    Int t(static_cast<long>(K.tr_omega())), m(static_cast<long>(K.nm_omega()));
    Int absdisc(static_cast<long>(-K.disc));
    Int ymax = isqrt(4 * n / absdisc) + 1;
    for (Int y = -ymax; y <= ymax; ++y) {
      // x^2 + t y x + (m y^2 - n) = 0
      Int disc = t * t * y * y - 4 * (m * y * y - n);
      if (disc < 0 || !is_square(disc)) continue;
      Int s = isqrt(disc);
      for (int sgn : {1, -1}) {
        if (s == 0 && sgn == -1) continue;
        Int twox = -t * y + sgn * s;
        if (twox % 2 != 0) continue;
        FieldElem cand = elem(K, Rat(twox / 2), Rat(y));
        if (abs(cand.norm()) == Rat(n)) out.push_back(cand);
      }
    }
  } else {
    FieldElem eps = fundamental_unit(K);
    // real embeddings of eps and sqrt(d), as integer ceilings
    Rat ea = eps.x, eb = eps.y;
    if (K.basis_kind == BasisKind::HalfBasis) {
      ea = eps.x + eps.y / 2;
      eb = eps.y / 2;
    }
    // ceil(eps-hat) <= ceil(|ea|) + ceil(|eb|) * (floor(sqrt(d)) + 1)
    Int sqd = isqrt(Int(static_cast<long>(K.d)));
    auto rat_ceil = [](const Rat& r) {
      Rat a = abs(r);
      Int q;
      mpz_cdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
      return q;
    };
    Int ehat = rat_ceil(ea) + rat_ceil(eb) * (sqd + 1);
    Int B2 = n * ehat;       // bound^2 on both embeddings
    Int B = isqrt(B2) + 1;   // |sigma(alpha)| <= B
    // y = (sigma - sigma')/ (w - w'), |w - w'| = sqrt(d) or 2 sqrt(d)
    Int wdiff_floor = K.basis_kind == BasisKind::HalfBasis ? sqd : 2 * sqd;
    if (wdiff_floor == 0) wdiff_floor = 1;
    Int ymax = (2 * B) / wdiff_floor + 1;
    Int xmax = B + ymax * (sqd + 2) + 1;
    if ((2 * ymax + 1) * (2 * xmax + 1) > budget)
      throw std::domain_error("norm_solutions: search box exceeds budget");
    Int t(static_cast<long>(K.tr_omega())), m(static_cast<long>(K.nm_omega()));
    for (Int y = -ymax; y <= ymax; ++y) {
      // |x^2 + t x y + m y^2| = n: solve both signs
      for (int sgn : {1, -1}) {
        Int c = m * y * y - sgn * n;
        Int disc = t * t * y * y - 4 * c;
        if (disc < 0 || !is_square(disc)) continue;
        Int s = isqrt(disc);
        for (int s2 : {1, -1}) {
          Int twox = -t * y + s2 * s;
          if (twox % 2 != 0) continue;
          if (s == 0 && s2 == -1) continue;
          FieldElem cand = elem(K, Rat(twox / 2), Rat(y));
          if (abs(cand.norm()) == Rat(n)) out.push_back(cand);
        }
      }
    }
  }
  return out;
}

// Generator of the smallest principal power P^k, k <= 6.
std::pair<FieldElem, int> principal_power_generator(const QuadField& K, const PrimeOfK& P) {
  if (P.f == 2) return {elem(K, P.p), 1};
  for (int k = 1; k <= 6; ++k) {
    if (P.ramified() && k == 2) return {elem(K, P.p), 2};
    Int n;
    mpz_pow_ui(n.get_mpz_t(), Int(static_cast<long>(P.p)).get_mpz_t(), static_cast<unsigned>(k));
    for (const FieldElem& cand : norm_solutions(K, n)) {
      if (valuation(cand, P) == k) return {cand, k};
    }
  }
  throw std::domain_error("principal_power_generator: no principal power P^k with k <= 6");
}

}  // namespace

std::vector<FieldElem> s_unit_square_classes(const QuadField& K, const std::set<i64>& S) {
  std::vector<FieldElem> gens;
  gens.push_back(elem(K, -1));
  if (K.is_real()) {
    gens.push_back(fundamental_unit(K));
  } else if (K.d == -1) {
    gens.push_back(elem(K, 0, 1));  // i
  }
  for (i64 p : S) {
    for (const PrimeOfK& P : split_prime(K, p)) {
      gens.push_back(principal_power_generator(K, P).first);
    }
  }
  std::vector<FieldElem> out;
  size_t count = size_t{1} << gens.size();
  for (size_t mask = 0; mask < count; ++mask) {
    FieldElem prod = elem(K, 1);
    for (size_t i = 0; i < gens.size(); ++i)
      if (mask & (size_t{1} << i)) prod = prod * gens[i];
    bool dup = false;
    for (const FieldElem& seen : out) {
      if (field_sqrt(prod / seen).has_value()) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(prod);
  }
  return out;
}

}  // namespace hvn
