#include "hvn/fq.hpp"

namespace hvn {

Fq::Fq(i64 p, int f) : p_(static_cast<u64>(p)), f_(f) {
  HVN_CHECK(p >= 2 && is_prime(static_cast<u64>(p)));
  HVN_CHECK(f == 1 || f == 2);
  q_ = f == 1 ? p_ : p_ * p_;
  s0_ = s1_ = 0;
  if (f == 2) {
    if (p_ == 2) {
      // t^2 + t + 1
      s0_ = 1;
      s1_ = 1;
    } else {
      // t^2 + b with -b a non-residue; least such b gives the lex-least
      // monic irreducible (the a = 0 slice is scanned first).
      for (u64 b = 1; b < p_; ++b) {
        if (legendre(static_cast<i64>(p_ - b), static_cast<i64>(p_)) == -1) {
          s0_ = p_ - b;  // t^2 = -b
          s1_ = 0;
          break;
        }
      }
      HVN_CHECK(s0_ != 0);
    }
  }
}

FqElem Fq::from_int(const Int& n) const {
  Int r = n % Int(static_cast<long>(p_));
  if (r < 0) r += Int(static_cast<long>(p_));
  return {r.get_ui(), 0};
}

FqElem Fq::add(FqElem x, FqElem y) const {
  u64 a = x.a + y.a;
  if (a >= p_) a -= p_;
  u64 b = x.b + y.b;
  if (b >= p_) b -= p_;
  return {a, b};
}

FqElem Fq::sub(FqElem x, FqElem y) const {
  u64 a = x.a + p_ - y.a;
  if (a >= p_) a -= p_;
  u64 b = x.b + p_ - y.b;
  if (b >= p_) b -= p_;
  return {a, b};
}

FqElem Fq::neg(FqElem x) const {
  return {x.a ? p_ - x.a : 0, x.b ? p_ - x.b : 0};
}

FqElem Fq::mul(FqElem x, FqElem y) const {
  if (f_ == 1) return {mulmod(x.a, y.a, p_), 0};
  // (a1 + b1 t)(a2 + b2 t) with t^2 = s0 + s1 t
  u64 aa = mulmod(x.a, y.a, p_);
  u64 bb = mulmod(x.b, y.b, p_);
  u64 cross = mulmod(x.a, y.b, p_) + mulmod(x.b, y.a, p_);
  if (cross >= p_) cross -= p_;
  u64 a = aa + mulmod(bb, s0_, p_);
  if (a >= p_) a -= p_;
  u64 b = cross + mulmod(bb, s1_, p_);
  if (b >= p_) b -= p_;
  return {a, b};
}

FqElem Fq::inv(FqElem x) const {
  HVN_CHECK(!is_zero(x));
  if (f_ == 1) return {invmod(x.a, p_), 0};
  return pow(x, q_ - 2);
}

FqElem Fq::pow(FqElem x, u64 e) const {
  FqElem r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

FqElem Fq::mul_int(FqElem x, i64 c) const {
  i64 cc = c % static_cast<i64>(p_);
  if (cc < 0) cc += static_cast<i64>(p_);
  FqElem s = make(static_cast<u64>(cc));
  return mul(x, s);
}

int Fq::chi(const FqElem& x) const {
  HVN_CHECK(p_ > 2);
  if (is_zero(x)) return 0;
  FqElem r = pow(x, (q_ - 1) / 2);
  if (r == one()) return 1;
  HVN_CHECK(r == neg(one()));
  return -1;
}

std::optional<FqElem> Fq::sqrt(const FqElem& x) const {
  HVN_CHECK(p_ > 2);
  if (is_zero(x)) return zero();
  if (chi(x) != 1) return std::nullopt;
  // Tonelli-Shanks in F_q.
  u64 m = q_ - 1;
  int s = 0;
  while ((m & 1) == 0) m >>= 1, ++s;
  FqElem z = non_square();
  FqElem c = pow(z, m);
  FqElem t = pow(x, m);
  FqElem r = pow(x, (m + 1) / 2);
  int e = s;
  while (!(t == one())) {
    FqElem t2 = t;
    int i = 0;
    while (!(t2 == one())) {
      t2 = sqr(t2);
      ++i;
      HVN_CHECK(i < e);
    }
    FqElem b = c;
    for (int j = 0; j < e - i - 1; ++j) b = sqr(b);
    e = i;
    c = sqr(b);
    t = mul(t, c);
    r = mul(r, b);
  }
  HVN_CHECK(sqr(r) == x);
  return r;
}

FqElem Fq::non_square() const {
  HVN_CHECK(p_ > 2);
  if (f_ == 1) {
    for (u64 a = 2; a < p_; ++a)
      if (legendre(static_cast<i64>(a), static_cast<i64>(p_)) == -1) return {a, 0};
    HVN_CHECK(false);
  }
  // t generates valuation-1-like behavior: chi(t) = chi(norm-ish); scan.
  for (u64 b = 0; b < p_; ++b)
    for (u64 a = (b == 0 ? 2 : 0); a < p_; ++a) {
      FqElem x{a, b};
      if (!is_zero(x) && chi(x) == -1) return x;
    }
  HVN_CHECK(false);
}

std::vector<FqElem> Fq::all_elements() const {
  std::vector<FqElem> out;
  out.reserve(q_);
  if (f_ == 1) {
    for (u64 a = 0; a < p_; ++a) out.push_back({a, 0});
  } else {
    for (u64 b = 0; b < p_; ++b)
      for (u64 a = 0; a < p_; ++a) out.push_back({a, b});
  }
  return out;
}

}  // namespace hvn
