#pragma once

#include <array>
#include <mutex>

#include "hvn/heavenly.hpp"

namespace hvn {

struct CMOrderDisc {
  i64 D = 0;          // order discriminant, = f^2 * fund_disc
  i64 m = 0;          // squarefree part: the CM field is Q(sqrt(-m))
  i64 f = 1;          // conductor
  i64 h = 0;          // class number
  i64 fund_disc = 0;  // discriminant of Q(sqrt(-m))
};

// Reduced primitive forms (a, b, c) of discriminant D < 0: |b| <= a <= c,
// b >= 0 when |b| = a or a = c, gcd(a, b, c) = 1.
std::vector<std::array<i64, 3>> reduced_forms(i64 D);
i64 class_number(i64 D);

// Order/conductor data for a discriminant (D = f^2 * fundamental).
CMOrderDisc order_data(i64 D);

// All order discriminants with h(D) = 2, |D| <= 1000.
std::vector<CMOrderDisc> class_number_2_discs();
// Conductors f with h(f^2 * fund_disc) = 1 (the rational-j orders of L).
std::vector<i64> class_number_1_conductors(i64 fund_disc);

// q-expansion coefficients of j: index n holds the q^n coefficient,
// with the 1/q term implied (j = 1/q + 744 + 196884 q + ...).
std::vector<Int> j_series_coefficients(size_t terms);

// Hilbert class polynomial, ascending coefficients, monic of degree h(D).
// Evaluated from the q-expansion with a doubling precision ladder.
std::vector<Int> hilbert_class_poly(i64 D);

struct HilbertRoots {
  i64 d0 = 0;        // real quadratic field Q(sqrt(d0)) generated by the roots
  FieldElem j1, j2;  // the two conjugate roots (h = 2)
};
// Root field and exact roots for h(D) = 2.
HilbertRoots hilbert_roots(i64 D);

// Integral model with the given j-invariant:
// y^2 = x^3 - 3 j (j-1728)^3 x - 2 j (j-1728)^5 for j != 0, 1728.
CurveOverK curve_from_j(const FieldElem& j);
CurveOverK curve_from_rational_j(const QuadField& K, const Int& j);

// Candidate primes for a K-rational isogeny of degree ell: a superset
// heuristic; each candidate is tested downstream.
std::vector<i64> isogeny_prime_candidates(const CMOrderDisc& D);

}  // namespace hvn
