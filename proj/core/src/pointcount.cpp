#include "hvn/pointcount.hpp"
#include <numeric>

#include <unordered_map>

namespace hvn {

namespace {

struct BValues {
  FqElem b2, b4, b6, b8;
};

BValues b_values(const CurveOverFq& E) {
  const Fq& F = E.F;
  BValues b;
  b.b2 = F.add(F.sqr(E.a1), F.mul_int(E.a2, 4));
  b.b4 = F.add(F.mul_int(E.a4, 2), F.mul(E.a1, E.a3));
  b.b6 = F.add(F.sqr(E.a3), F.mul_int(E.a6, 4));
  b.b8 = F.add(F.sub(F.add(F.mul(F.sqr(E.a1), E.a6), F.mul_int(F.mul(E.a2, E.a6), 4)),
                     F.mul(E.a1, F.mul(E.a3, E.a4))),
               F.sub(F.mul(E.a2, F.sqr(E.a3)), F.sqr(E.a4)));
  return b;
}

}  // namespace

FqElem CurveOverFq::discriminant() const {
  BValues b = b_values(*this);
  const Fq& Q = F;
  FqElem t1 = Q.neg(Q.mul(Q.sqr(b.b2), b.b8));
  FqElem t2 = Q.neg(Q.mul_int(Q.mul(b.b4, Q.sqr(b.b4)), 8));
  FqElem t3 = Q.neg(Q.mul_int(Q.sqr(b.b6), 27));
  FqElem t4 = Q.mul_int(Q.mul(b.b2, Q.mul(b.b4, b.b6)), 9);
  return Q.add(Q.add(t1, t2), Q.add(t3, t4));
}

int quadratic_character(const Fq& F, const FqElem& x) {
  if (F.p() == 2) throw std::domain_error("quadratic_character: p = 2");
  return F.chi(x);
}

i64 count_exhaustive(const CurveOverFq& E, i64 threshold) {
  const Fq& F = E.F;
  if (static_cast<i64>(F.q()) > threshold)
    throw std::domain_error("count_exhaustive: q exceeds threshold");
  i64 count = 1;  // infinity
  if (F.p() == 2) {
    // For each x: y^2 + c y = g(x) with c = a1 x + a3. One solution when
    // c = 0 (Frobenius is bijective), else 2 or 0 by the trace of g/c^2.
    for (const FqElem& x : F.all_elements()) {
      FqElem x2 = F.sqr(x);
      FqElem g = F.add(F.add(F.mul(x2, x), F.mul(E.a2, x2)), F.add(F.mul(E.a4, x), E.a6));
      FqElem c = F.add(F.mul(E.a1, x), E.a3);
      if (F.is_zero(c)) {
        count += 1;
        continue;
      }
      FqElem w = F.mul(g, F.sqr(F.inv(c)));
      // solutions of z^2 + z = w: 2 iff absolute trace of w vanishes
      FqElem tr = w;
      u64 q = F.q();
      for (u64 m = 2; m < q; m *= 2) tr = F.add(F.sqr(tr), w);
      // tr = w + w^2 + ... + w^(q/2); z^2+z=w solvable iff tr == 0
      if (F.is_zero(tr)) count += 2;
    }
    return count;
  }
  // odd p: complete the square, count via the quadratic character of
  // g(x) = 4x^3 + b2 x^2 + 2 b4 x + b6.
  BValues b = b_values(E);
  for (const FqElem& x : F.all_elements()) {
    FqElem x2 = F.sqr(x);
    FqElem g = F.add(F.add(F.mul_int(F.mul(x2, x), 4), F.mul(b.b2, x2)),
                     F.add(F.mul_int(F.mul(b.b4, x), 2), b.b6));
    count += 1 + F.chi(g);
  }
  return count;
}

namespace {

// Affine/infinity point on y^2 = x^3 + Ax + B.
struct Pt {
  FqElem x, y;
  bool inf = true;
};

struct ShortCurve {
  Fq F;
  FqElem A, B;

  Pt add(const Pt& p, const Pt& q) const {
    if (p.inf) return q;
    if (q.inf) return p;
    if (p.x == q.x) {
      if (F.is_zero(F.add(p.y, q.y))) return {};  // inverse points
      // doubling
      FqElem num = F.add(F.mul_int(F.sqr(p.x), 3), A);
      FqElem den = F.mul_int(p.y, 2);
      FqElem lambda = F.mul(num, F.inv(den));
      FqElem x3 = F.sub(F.sqr(lambda), F.mul_int(p.x, 2));
      FqElem y3 = F.sub(F.mul(lambda, F.sub(p.x, x3)), p.y);
      return {x3, y3, false};
    }
    FqElem lambda = F.mul(F.sub(q.y, p.y), F.inv(F.sub(q.x, p.x)));
    FqElem x3 = F.sub(F.sub(F.sqr(lambda), p.x), q.x);
    FqElem y3 = F.sub(F.mul(lambda, F.sub(p.x, x3)), p.y);
    return {x3, y3, false};
  }

  Pt neg(const Pt& p) const { return p.inf ? p : Pt{p.x, F.neg(p.y), false}; }

  Pt mul(Pt p, u64 k) const {
    Pt r;
    while (k) {
      if (k & 1) r = add(r, p);
      p = add(p, p);
      k >>= 1;
    }
    return r;
  }

  Pt random_point(Rng& rng) const {
    for (;;) {
      u64 p = static_cast<u64>(F.p());
      FqElem x = F.make(rng.uniform(p), F.f() == 2 ? rng.uniform(p) : 0);
      FqElem g = F.add(F.mul(F.add(F.sqr(x), A), x), B);
      auto y = F.sqrt(g);
      if (y.has_value()) return {x, *y, false};
    }
  }
};

u64 key_of(const FqElem& e) { return e.a | (e.b << 32); }

// Smallest N in [lo, hi + 2m] with N*P = 0, via baby-step giant-step; every
// match is verified exactly, and any annihilator determines the order after
// prime stripping.
u64 annihilator_in_interval(const ShortCurve& C, const Pt& P, u64 lo, u64 hi) {
  u64 width = hi - lo + 1;
  u64 m = 1;
  while (m * m < width) ++m;
  // baby steps: x-coordinates of j*P for j in [0, m)
  std::unordered_map<u64, std::vector<u64>> baby;
  baby.reserve(m * 2);
  {
    Pt cur;  // 0*P
    for (u64 j = 0; j < m; ++j) {
      baby[cur.inf ? ~0ull : key_of(cur.x)].push_back(j);
      cur = C.add(cur, P);
    }
  }
  // (lo + im + j)P = 0  <=>  Q + imP = -jP, matched on x so both signs of j
  // are candidates.
  Pt Q = C.mul(P, lo);
  Pt mP = C.mul(P, m);
  u64 best = 0;
  bool found = false;
  Pt giant = Q;
  for (u64 i = 0; i * m <= width + m; ++i) {
    u64 key = giant.inf ? ~0ull : key_of(giant.x);
    auto it = baby.find(key);
    if (it != baby.end()) {
      for (u64 j : it->second) {
        for (i64 sign : {1, -1}) {
          i64 k = static_cast<i64>(i * m) + sign * static_cast<i64>(j);
          if (k < 0) continue;
          u64 N = lo + static_cast<u64>(k);
          if (N == 0 || (found && N >= best)) continue;
          if (C.mul(P, N).inf) {
            best = N;
            found = true;
          }
        }
      }
    }
    giant = C.add(giant, mP);
  }
  HVN_CHECK(found);
  return best;
}

u64 exact_order(const ShortCurve& C, const Pt& P, u64 annihilator) {
  u64 d = annihilator;
  u64 n = annihilator;
  for (u64 f = 2; f * f <= n; ++f) {
    while (n % f == 0) {
      n /= f;
      while (d % f == 0 && C.mul(P, d / f).inf) d /= f;
    }
  }
  if (n > 1)
    while (d % n == 0 && C.mul(P, d / n).inf) d /= n;
  HVN_CHECK(C.mul(P, d).inf);
  return d;
}

std::vector<u64> candidates(u64 lo, u64 hi, u64 L, u64 Ltw, u64 two_q_plus_2) {
  std::vector<u64> out;
  u64 start = ((lo + L - 1) / L) * L;
  for (u64 N = start; N <= hi; N += L) {
    if ((two_q_plus_2 - N) % Ltw == 0) out.push_back(N);
  }
  return out;
}

}  // namespace

i64 count_bsgs(const CurveOverFq& E, Rng& rng) {
  const Fq& F = E.F;
  HVN_CHECK(F.p() >= 5 && static_cast<i64>(F.q()) > 229);
  // pass to y^2 = x^3 + Ax + B (c4/c6 form; 6 invertible)
  BValues b = b_values(E);
  FqElem c4 = F.sub(F.sqr(b.b2), F.mul_int(b.b4, 24));
  FqElem c6 = F.add(F.sub(F.neg(F.mul(b.b2, F.sqr(b.b2))), F.mul_int(b.b6, 216)),
                    F.mul_int(F.mul(b.b2, b.b4), 36));
  ShortCurve C{F, F.mul_int(c4, -27), F.mul_int(c6, -54)};
  FqElem g = F.non_square();
  ShortCurve Ctw{F, F.mul(C.A, F.sqr(g)), F.mul(C.B, F.mul(g, F.sqr(g)))};
  u64 q = F.q();
  u64 s = static_cast<u64>(isqrt(Int(4 * Int(static_cast<unsigned long>(q)))).get_ui());
  while (s * s < 4 * q) ++s;  // s = ceil(2 sqrt q)
  u64 lo = q + 1 - s, hi = q + 1 + s;
  u64 lo_tw = lo, hi_tw = hi;
  u64 L = 1, Ltw = 1;
  for (int iter = 0; iter < 40; ++iter) {
    auto cand = candidates(lo, hi, L, Ltw, 2 * q + 2);
    HVN_CHECK(!cand.empty());
    if (cand.size() == 1) return static_cast<i64>(cand[0]);
    if (iter % 2 == 0) {
      Pt P = C.random_point(rng);
      u64 ann = annihilator_in_interval(C, P, lo, hi);
      L = std::lcm(L, exact_order(C, P, ann));
    } else {
      Pt P = Ctw.random_point(rng);
      u64 ann = annihilator_in_interval(Ctw, P, lo_tw, hi_tw);
      Ltw = std::lcm(Ltw, exact_order(Ctw, P, ann));
    }
  }
  throw std::logic_error("count_bsgs: order not determined after 40 points");
}

i64 count_points(const CurveOverFq& E, Rng& rng) {
  const Fq& F = E.F;
  if (F.q() <= 229 || F.p() <= 3) {
    HVN_CHECK(static_cast<i64>(F.q()) <= kExhaustiveThreshold);
    return count_exhaustive(E);
  }
  return count_bsgs(E, rng);
}

}  // namespace hvn
