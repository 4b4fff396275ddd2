#pragma once

#include "hvn/fq.hpp"
#include "hvn/rng.hpp"

namespace hvn {

struct CurveOverFq {
  Fq F;
  FqElem a1, a2, a3, a4, a6;

  CurveOverFq(const Fq& field, FqElem c1, FqElem c2, FqElem c3, FqElem c4, FqElem c6)
      : F(field), a1(c1), a2(c2), a3(c3), a4(c4), a6(c6) {}

  FqElem discriminant() const;
};

inline constexpr i64 kExhaustiveThreshold = 10000;

// Exact #E(F_q) including infinity, for q <= threshold. Per-x quadratic
// character sums for odd p, direct solve in y for p = 2.
i64 count_exhaustive(const CurveOverFq& E, i64 threshold = kExhaustiveThreshold);

// Exact group order by random-point order finding: baby-step giant-step in
// the Hasse interval, lcm accumulation, quadratic-twist disambiguation.
// Requires odd q > 229 and residue characteristic >= 5.
i64 count_bsgs(const CurveOverFq& E, Rng& rng);

// Dispatch: exhaustive for q <= 229 or char in {2, 3}, BSGS otherwise.
i64 count_points(const CurveOverFq& E, Rng& rng);

// 0 at 0, else Euler's criterion x^((q-1)/2). Odd p only.
int quadratic_character(const Fq& F, const FqElem& x);

}  // namespace hvn
