#include "hvn/cmsearch.hpp"

#include <numeric>

namespace hvn {

std::vector<std::array<i64, 3>> reduced_forms(i64 D) {
  if (D >= 0 || ((D % 4) + 4) % 4 > 1)
    throw std::invalid_argument("reduced_forms: D must be negative and 0 or 1 mod 4");
  std::vector<std::array<i64, 3>> out;
  i64 absD = -D;
  for (i64 b = (absD % 2 == 0) ? 0 : 1; 3 * b * b <= absD; b += 2) {
    i64 m = (b * b + absD) / 4;
    for (i64 a = std::max<i64>(b, 1); a * a <= m; ++a) {
      if (m % a != 0) continue;
      i64 c = m / a;
      i64 g = std::gcd(a, std::gcd(b, c));
      if (g != 1) continue;
      out.push_back({a, b, c});
      if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
    }
  }
  return out;
}

i64 class_number(i64 D) { return static_cast<i64>(reduced_forms(D).size()); }

CMOrderDisc order_data(i64 D) {
  HVN_CHECK(D < 0 && (((D % 4) + 4) % 4 <= 1));
  CMOrderDisc out;
  out.D = D;
  auto [d0, s] = squarefree_decompose(Int(static_cast<long>(D)));
  HVN_CHECK(d0 < 0 && d0.fits_slong_p() && s.fits_slong_p());
  i64 dsf = d0.get_si();  // squarefree part; field is Q(sqrt(dsf))
  out.m = -dsf;
  i64 mod = ((dsf % 4) + 4) % 4;
  out.fund_disc = mod == 1 ? dsf : 4 * dsf;
  HVN_CHECK(D % out.fund_disc == 0);
  i64 f2 = D / out.fund_disc;
  out.f = isqrt(Int(f2)).get_si();
  HVN_CHECK(out.f * out.f == f2);
  out.h = class_number(D);
  return out;
}

std::vector<CMOrderDisc> class_number_2_discs() {
  std::vector<CMOrderDisc> out;
  for (i64 D = -3; D >= -1000; --D) {
    if (((D % 4) + 4) % 4 > 1) continue;
    if (class_number(D) == 2) out.push_back(order_data(D));
  }
  return out;
}

std::vector<i64> class_number_1_conductors(i64 fund_disc) {
  HVN_CHECK(fund_disc < 0);
  std::vector<i64> out;
  for (i64 f = 1; f * f * (-fund_disc) <= 1000; ++f) {
    if (class_number(f * f * fund_disc) == 1) out.push_back(f);
  }
  return out;
}

CurveOverK curve_from_j(const FieldElem& j) {
  const QuadField& K = j.K;
  if (j.is_zero()) return short_curve(K, elem(K, 0), elem(K, 1));
  if (j == elem(K, 1728)) return short_curve(K, elem(K, 1), elem(K, 0));
  FieldElem t = j - elem(K, 1728);
  FieldElem t3 = t.pow(3);
  FieldElem A = j * t3 * Rat(-3);
  FieldElem B = j * t3 * (t * t) * Rat(-2);
  CurveOverK E = short_curve(K, A, B);
  HVN_CHECK(E.j() == j);
  return E;
}

CurveOverK curve_from_rational_j(const QuadField& K, const Int& j) {
  return curve_from_j(elem(K, Rat(j), Rat(0)));
}

std::vector<i64> isogeny_prime_candidates(const CMOrderDisc& D) {
  std::vector<i64> out;
  for (i64 ell : primes_up_to(163)) {
    if (kronecker(D.D, ell) != -1 || (D.f * D.D) % ell == 0) out.push_back(ell);
  }
  return out;
}

}  // namespace hvn
