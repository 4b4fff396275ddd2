#include "hvn/ellcurve.hpp"

namespace hvn {

const char* reduction_kind_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::Good: return "good";
    case ReductionKind::Multiplicative: return "multiplicative";
    case ReductionKind::Additive: return "additive";
  }
  return "?";
}

CurveOverK::CurveOverK(const QuadField& K, FieldElem a1, FieldElem a2, FieldElem a3, FieldElem a4,
                       FieldElem a6)
    : K_(K),
      a1_(std::move(a1)),
      a2_(std::move(a2)),
      a3_(std::move(a3)),
      a4_(std::move(a4)),
      a6_(std::move(a6)) {
  FieldElem b2 = this->b2(), b4 = this->b4(), b6 = this->b6(), b8 = this->b8();
  c4_ = b2 * b2 - b4 * Rat(24);
  c6_ = -(b2 * b2 * b2) + b2 * b4 * Rat(36) - b6 * Rat(216);
  disc_ = -(b2 * b2) * b8 - b4.pow(3) * Rat(8) - b6 * b6 * Rat(27) + b2 * b4 * b6 * Rat(9);
  if (disc_.is_zero()) throw std::domain_error("CurveOverK: singular curve (disc = 0)");
  j_ = c4_.pow(3) / disc_;
  HVN_CHECK(c4_.pow(3) - c6_ * c6_ == disc_ * Rat(1728));
}

FieldElem CurveOverK::b2() const { return a1_ * a1_ + a2_ * Rat(4); }
FieldElem CurveOverK::b4() const { return a4_ * Rat(2) + a1_ * a3_; }
FieldElem CurveOverK::b6() const { return a3_ * a3_ + a6_ * Rat(4); }
FieldElem CurveOverK::b8() const {
  return a1_ * a1_ * a6_ + a2_ * a6_ * Rat(4) - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
}

bool CurveOverK::integral() const {
  return a1_.is_integral() && a2_.is_integral() && a3_.is_integral() && a4_.is_integral() &&
         a6_.is_integral();
}

CurveOverK CurveOverK::transformed(const FieldElem& r, const FieldElem& s, const FieldElem& t,
                                   const FieldElem& u) const {
  if (u.is_zero()) throw std::domain_error("transformed: u = 0");
  FieldElem u2 = u * u, u3 = u2 * u;
  FieldElem na1 = (a1_ + s * Rat(2)) / u;
  FieldElem na2 = (a2_ - s * a1_ + r * Rat(3) - s * s) / u2;
  FieldElem na3 = (a3_ + r * a1_ + t * Rat(2)) / u3;
  FieldElem na4 = (a4_ - s * a3_ + (r * a2_) * Rat(2) - (t + r * s) * a1_ + r * r * Rat(3) -
                   (s * t) * Rat(2)) /
                  (u2 * u2);
  FieldElem na6 =
      (a6_ + r * a4_ + r * r * a2_ + r * r * r - t * a3_ - t * t - (r * t) * a1_) / (u3 * u3);
  return CurveOverK(K_, na1, na2, na3, na4, na6);
}

bool CurveOverK::operator==(const CurveOverK& o) const {
  return K_ == o.K_ && a1_ == o.a1_ && a2_ == o.a2_ && a3_ == o.a3_ && a4_ == o.a4_ && a6_ == o.a6_;
}

CurveOverK make_curve(const QuadField& K, const std::vector<FieldElem>& a) {
  HVN_CHECK(a.size() == 5);
  return CurveOverK(K, a[0], a[1], a[2], a[3], a[4]);
}

CurveOverK short_curve(const QuadField& K, const FieldElem& A, const FieldElem& B) {
  FieldElem z = elem(K, 0);
  return CurveOverK(K, z, z, z, A, B);
}

CurveOverK quadratic_twist(const CurveOverK& E, const FieldElem& u) {
  if (u.is_zero()) throw std::domain_error("quadratic_twist: u = 0");
  const QuadField& K = E.field();
  FieldElem A = E.c4() * u * u * Rat(-27);
  FieldElem B = E.c6() * u.pow(3) * Rat(-54);
  CurveOverK out = short_curve(K, A, B);
  HVN_CHECK(out.j() == E.j());
  return out;
}

GoodOutsideReport good_outside(const CurveOverK& E, const std::set<i64>& S,
                               const std::set<i64>* support) {
  GoodOutsideReport rep;
  HVN_CHECK(E.integral());
  std::set<i64> local;
  if (!support) {
    Rat nd = E.disc().norm();
    for (const auto& [p, e] : factor(Int(nd.get_num()))) {
      (void)e;
      HVN_CHECK(p.fits_slong_p());
      local.insert(p.get_si());
    }
    support = &local;
  }
  for (i64 pl : *support) {
    if (S.count(pl)) continue;
    for (const PrimeOfK& P : split_prime(E.field(), pl)) {
      if (tate_reduce(E, P).kind != ReductionKind::Good) {
        rep.ok = false;
        rep.witnesses.push_back(P);
      }
    }
  }
  return rep;
}

std::set<i64> bad_rational_primes(const CurveOverK& E) {
  std::set<i64> out;
  for (const PrimeOfK& P : good_outside(E, {}).witnesses) out.insert(P.p);
  return out;
}

}  // namespace hvn
