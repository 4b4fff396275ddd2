#pragma once

#include <vector>

#include "hvn/quadfield.hpp"

namespace hvn {

enum class ReductionKind { Good, Multiplicative, Additive };

const char* reduction_kind_name(ReductionKind k);

struct ReductionInfo {
  PrimeOfK prime;
  ReductionKind kind = ReductionKind::Good;
  int min_disc_val = 0;  // v(disc) of a P-minimal model
};

// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// over K, with cached invariants.
class CurveOverK {
 public:
  CurveOverK(const QuadField& K, FieldElem a1, FieldElem a2, FieldElem a3, FieldElem a4,
             FieldElem a6);

  const QuadField& field() const { return K_; }
  const FieldElem& a1() const { return a1_; }
  const FieldElem& a2() const { return a2_; }
  const FieldElem& a3() const { return a3_; }
  const FieldElem& a4() const { return a4_; }
  const FieldElem& a6() const { return a6_; }

  FieldElem b2() const;
  FieldElem b4() const;
  FieldElem b6() const;
  FieldElem b8() const;
  const FieldElem& c4() const { return c4_; }
  const FieldElem& c6() const { return c6_; }
  const FieldElem& disc() const { return disc_; }
  const FieldElem& j() const { return j_; }

  bool integral() const;

  // Admissible change of coordinates x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
  CurveOverK transformed(const FieldElem& r, const FieldElem& s, const FieldElem& t,
                         const FieldElem& u) const;

  bool operator==(const CurveOverK& o) const;

 private:
  QuadField K_;
  FieldElem a1_, a2_, a3_, a4_, a6_;
  FieldElem c4_, c6_, disc_, j_;
};

CurveOverK make_curve(const QuadField& K, const std::vector<FieldElem>& a);
// Short model y^2 = x^3 + A x + B.
CurveOverK short_curve(const QuadField& K, const FieldElem& A, const FieldElem& B);

// Quadratic twist by u != 0, presented as y^2 = x^3 - 27 c4 u^2 x - 54 c6 u^3.
CurveOverK quadratic_twist(const CurveOverK& E, const FieldElem& u);

// Reduction type at P of a P-minimal model. Residue characteristic >= 5 uses
// the c4/disc valuation criterion after unscaling; p in {2, 3} runs the full
// Tate loop over the residue field.
ReductionInfo tate_reduce(const CurveOverK& E, const PrimeOfK& P);

// Same, also returning a P-integral model realizing the minimal valuation
// (used to reduce the curve at good primes above 2 and 3).
struct TateResult {
  ReductionInfo info;
  // model with v_P(disc) = min_disc_val; integral at P
  std::vector<FieldElem> a;  // a1, a2, a3, a4, a6
};
TateResult tate_reduce_model(const CurveOverK& E, const PrimeOfK& P);

struct GoodOutsideReport {
  bool ok = true;
  std::vector<PrimeOfK> witnesses;  // offending primes
};

// True iff E has good reduction at every prime not above S. Checks primes
// dividing norm(disc); factoring that norm must succeed (loud failure).
// A precomputed support (primes dividing norm(disc)) can be supplied to
// skip the factorization.
GoodOutsideReport good_outside(const CurveOverK& E, const std::set<i64>& S,
                               const std::set<i64>* support = nullptr);

// Rational primes p such that some prime above p has bad reduction.
std::set<i64> bad_rational_primes(const CurveOverK& E);

}  // namespace hvn
