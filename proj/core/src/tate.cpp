#include "hvn/ellcurve.hpp"

namespace hvn {

namespace {

int val_or_inf(const FieldElem& v, const PrimeOfK& P) {
  return v.is_zero() ? kValInfinity : valuation(v, P);
}

// Residue characteristic >= 5: pass to y^2 = x^3 + Ax + B (6 is a unit at P)
// and unscale by the uniformizer while v(A) >= 4k and v(disc) >= 12k.
TateResult tate_large_char(const CurveOverK& E, const PrimeOfK& P) {
  const QuadField& K = E.field();
  FieldElem A = E.c4() * Rat(-27), B = E.c6() * Rat(-54);
  CurveOverK cur = short_curve(K, A, B);
  int vD = valuation(cur.disc(), P);
  int vA = val_or_inf(A, P);
  int k = vD / 12;
  if (vA != kValInfinity) k = std::min(k, vA / 4);
  if (k > 0) {
    FieldElem pi = uniformizer(K, P);
    FieldElem u = pi.pow(static_cast<unsigned>(k));
    cur = cur.transformed(elem(K, 0), elem(K, 0), elem(K, 0), u);
    vD -= 12 * k;
    HVN_CHECK(valuation(cur.disc(), P) == vD);
  }
  TateResult res;
  res.info.prime = P;
  res.info.min_disc_val = vD;
  if (vD == 0) {
    res.info.kind = ReductionKind::Good;
  } else if (val_or_inf(cur.c4(), P) == 0) {
    res.info.kind = ReductionKind::Multiplicative;
  } else {
    res.info.kind = ReductionKind::Additive;
  }
  res.a = {cur.a1(), cur.a2(), cur.a3(), cur.a4(), cur.a6()};
  return res;
}

struct SmallCharCtx {
  const QuadField& K;
  PrimeOfK P;
  Fq F;
  FieldElem pi;
  std::vector<FqElem> field_elems;

  SmallCharCtx(const QuadField& K0, const PrimeOfK& P0)
      : K(K0), P(P0), F(P0.p, P0.f), pi(uniformizer(K0, P0)), field_elems(F.all_elements()) {}

  FieldElem lift(const FqElem& r) const { return lift_residue(K, P, r); }
};

// Multiplicity of alpha as a root of the monic cubic with k-coefficients
// (c2, c1, c0), via repeated synthetic division.
int cubic_root_multiplicity(const Fq& F, FqElem c2, FqElem c1, FqElem c0, FqElem alpha) {
  int mult = 0;
  std::vector<FqElem> coeffs = {c0, c1, c2, F.one()};  // ascending
  while (coeffs.size() > 1) {
    // synthetic division by (T - alpha)
    std::vector<FqElem> quot(coeffs.size() - 1);
    FqElem carry = coeffs.back();
    for (size_t i = coeffs.size() - 1; i-- > 0;) {
      quot[i] = carry;
      carry = F.add(coeffs[i], F.mul(carry, alpha));
    }
    if (!F.is_zero(carry)) break;
    ++mult;
    coeffs = quot;
  }
  return mult;
}

TateResult tate_small_char(const CurveOverK& E, const PrimeOfK& P) {
  const QuadField& K = E.field();
  SmallCharCtx ctx(K, P);
  const Fq& F = ctx.F;
  FieldElem zero = elem(K, 0), one = elem(K, 1);
  CurveOverK cur = E;

  auto done = [&](ReductionKind kind, int n) {
    TateResult res;
    res.info.prime = P;
    res.info.kind = kind;
    res.info.min_disc_val = n;
    res.a = {cur.a1(), cur.a2(), cur.a3(), cur.a4(), cur.a6()};
    return res;
  };

  int guard = valuation(E.disc(), P) / 12 + 3;
  for (int round = 0; round < guard; ++round) {
    int n = valuation(cur.disc(), P);
    HVN_CHECK(n >= 0 && n != kValInfinity);
    if (n == 0) return done(ReductionKind::Good, 0);

    // Move the singular point of the reduction to (0, 0).
    {
      FqElem ra1 = residue(cur.a1(), P), ra2 = residue(cur.a2(), P), ra3 = residue(cur.a3(), P),
             ra4 = residue(cur.a4(), P), ra6 = residue(cur.a6(), P);
      bool found = false;
      for (const FqElem& x0 : ctx.field_elems) {
        FqElem x2 = F.sqr(x0), x3 = F.mul(x2, x0);
        for (const FqElem& y0 : ctx.field_elems) {
          // f = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6
          FqElem f = F.sub(
              F.add(F.sqr(y0), F.add(F.mul(ra1, F.mul(x0, y0)), F.mul(ra3, y0))),
              F.add(F.add(x3, F.mul(ra2, x2)), F.add(F.mul(ra4, x0), ra6)));
          if (!F.is_zero(f)) continue;
          // fx = a1 y - 3x^2 - 2 a2 x - a4 ; fy = 2y + a1 x + a3
          FqElem fx = F.sub(F.mul(ra1, y0),
                            F.add(F.add(F.mul_int(x2, 3), F.mul_int(F.mul(ra2, x0), 2)), ra4));
          FqElem fy = F.add(F.mul_int(y0, 2), F.add(F.mul(ra1, x0), ra3));
          if (F.is_zero(fx) && F.is_zero(fy)) {
            cur = cur.transformed(ctx.lift(x0), zero, ctx.lift(y0), one);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      HVN_CHECK(found);
    }
    HVN_CHECK(valuation(cur.a3(), P) >= 1 && valuation(cur.a4(), P) >= 1 &&
              valuation(cur.a6(), P) >= 1);

    if (val_or_inf(cur.c4(), P) == 0) return done(ReductionKind::Multiplicative, n);
    if (valuation(cur.a6(), P) < 2) return done(ReductionKind::Additive, n);   // II
    if (val_or_inf(cur.b8(), P) < 3) return done(ReductionKind::Additive, n);  // III
    if (val_or_inf(cur.b6(), P) < 3) return done(ReductionKind::Additive, n);  // IV

    // Normalize: pi | a1, a2 ; pi^2 | a3, a4 ; pi^3 | a6.
    {
      bool found = false;
      for (const FqElem& s0 : ctx.field_elems) {
        CurveOverK cand = cur.transformed(zero, ctx.lift(s0), zero, one);
        if (valuation(cand.a1(), P) >= 1 && valuation(cand.a2(), P) >= 1) {
          cur = cand;
          found = true;
          break;
        }
      }
      HVN_CHECK(found);
      found = false;
      for (const FqElem& t1 : ctx.field_elems) {
        CurveOverK cand = cur.transformed(zero, zero, ctx.pi * ctx.lift(t1), one);
        if (valuation(cand.a3(), P) >= 2 && valuation(cand.a6(), P) >= 3) {
          cur = cand;
          found = true;
          break;
        }
      }
      HVN_CHECK(found);
    }
    HVN_CHECK(valuation(cur.a4(), P) >= 2);

    // P(T) = T^3 + (a2/pi) T^2 + (a4/pi^2) T + (a6/pi^3) over the residue field.
    FieldElem pi2 = ctx.pi * ctx.pi, pi3 = pi2 * ctx.pi;
    FqElem c2 = residue(cur.a2() / ctx.pi, P);
    FqElem c1 = residue(cur.a4() / pi2, P);
    FqElem c0 = residue(cur.a6() / pi3, P);
    FqElem triple_root{};
    int max_mult = 1;
    for (const FqElem& alpha : ctx.field_elems) {
      int m = cubic_root_multiplicity(F, c2, c1, c0, alpha);
      if (m > max_mult) {
        max_mult = m;
        triple_root = alpha;
      }
    }
    if (max_mult <= 2) return done(ReductionKind::Additive, n);  // I0*, I_n*

    // Triple root: translate it to zero.
    cur = cur.transformed(ctx.pi * ctx.lift(triple_root), zero, zero, one);
    HVN_CHECK(valuation(cur.a2(), P) >= 2 && valuation(cur.a4(), P) >= 3 &&
              valuation(cur.a6(), P) >= 4);

    // Y^2 + (a3/pi^2) Y - (a6/pi^4): double root present?
    FieldElem pi4 = pi2 * pi2;
    FqElem q1 = residue(cur.a3() / pi2, P);
    FqElem q0 = F.neg(residue(cur.a6() / pi4, P));
    bool has_double = false;
    FqElem y0{};
    for (const FqElem& alpha : ctx.field_elems) {
      FqElem val = F.add(F.add(F.sqr(alpha), F.mul(q1, alpha)), q0);
      FqElem der = F.add(F.mul_int(alpha, 2), q1);
      if (F.is_zero(val) && F.is_zero(der)) {
        has_double = true;
        y0 = alpha;
        break;
      }
    }
    if (!has_double) return done(ReductionKind::Additive, n);  // IV*

    cur = cur.transformed(zero, zero, pi2 * ctx.lift(y0), one);
    HVN_CHECK(valuation(cur.a3(), P) >= 3 && valuation(cur.a6(), P) >= 5);

    if (valuation(cur.a4(), P) < 4) return done(ReductionKind::Additive, n);  // III*
    if (valuation(cur.a6(), P) < 6) return done(ReductionKind::Additive, n);  // II*

    // Non-minimal: rescale by pi and restart.
    HVN_CHECK(valuation(cur.a1(), P) >= 1 && valuation(cur.a2(), P) >= 2);
    cur = cur.transformed(zero, zero, zero, ctx.pi);
    for (const FieldElem& ai : {cur.a1(), cur.a2(), cur.a3(), cur.a4(), cur.a6()})
      HVN_CHECK(valuation(ai, P) >= 0);
  }
  HVN_CHECK(false);
}

}  // namespace

TateResult tate_reduce_model(const CurveOverK& E, const PrimeOfK& P) {
  HVN_CHECK(E.integral());
  if (P.p >= 5) return tate_large_char(E, P);
  return tate_small_char(E, P);
}

ReductionInfo tate_reduce(const CurveOverK& E, const PrimeOfK& P) {
  return tate_reduce_model(E, P).info;
}

}  // namespace hvn
