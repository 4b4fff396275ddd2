#pragma once

#include <iosfwd>
#include <set>
#include <vector>

#include "hvn/fq.hpp"
#include "hvn/numutil.hpp"

namespace hvn {

enum class BasisKind { SqrtBasis, HalfBasis };

// K = Q(sqrt(d)), d squarefree, with ring of integers Z[w]:
//   w = sqrt(d)       and m(T) = T^2 - d          when d != 1 mod 4,
//   w = (1+sqrt(d))/2 and m(T) = T^2 - T - (d-1)/4 when d == 1 mod 4.
struct QuadField {
  i64 d = 0;
  i64 disc = 0;
  BasisKind basis_kind = BasisKind::SqrtBasis;

  bool is_real() const { return d > 0; }
  // trace/norm of w: m(T) = T^2 - tr_omega*T + nm_omega.
  i64 tr_omega() const { return basis_kind == BasisKind::HalfBasis ? 1 : 0; }
  i64 nm_omega() const { return basis_kind == BasisKind::HalfBasis ? (1 - d) / 4 : -d; }
  std::string m_poly_string() const;

  bool operator==(const QuadField&) const = default;
};

QuadField make_field(i64 d);

// x + y*w, exact rational coordinates in the integral basis {1, w}.
struct FieldElem {
  QuadField K;
  Rat x, y;

  FieldElem() = default;
  FieldElem(const QuadField& field, Rat x0, Rat y0) : K(field), x(std::move(x0)), y(std::move(y0)) {
    x.canonicalize();
    y.canonicalize();
  }

  bool is_zero() const { return x == 0 && y == 0; }
  bool is_rational() const { return y == 0; }
  bool is_integral() const { return x.get_den() == 1 && y.get_den() == 1; }
  Rat norm() const;
  Rat trace() const;
  FieldElem conj() const;
  bool is_unit() const { return is_integral() && abs(norm()) == 1; }

  FieldElem operator-() const { return FieldElem(K, -x, -y); }
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator*(const Rat& c) const { return FieldElem(K, x * c, y * c); }
  FieldElem operator/(const Rat& c) const { return FieldElem(K, x / c, y / c); }
  FieldElem pow(unsigned e) const;
  bool operator==(const FieldElem& o) const { return K == o.K && x == o.x && y == o.y; }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& v);

FieldElem elem(const QuadField& K, i64 x, i64 y = 0);
FieldElem elem(const QuadField& K, const Rat& x, const Rat& y);
// The element sqrt(d) itself (basis-independent meaning).
FieldElem sqrt_d(const QuadField& K);

// Exact square test in K; returns a square root when one exists.
std::optional<FieldElem> field_sqrt(const FieldElem& v);

// sign of the real embedding x + y*sqrt(d) (+1/0/-1); requires real K.
// `conjugate` selects the embedding sqrt(d) -> -sqrt(d).
int embedding_sign(const FieldElem& v, bool conjugate = false);
// Exact comparison of the principal embedding against a rational.
int compare_embedding(const FieldElem& v, const Rat& c);

struct PrimeOfK {
  i64 p = 0;
  int e = 1;      // ramification index
  int f = 1;      // residue degree
  u64 root = 0;   // root of m(T) mod p when f = 1 (double root if ramified)
  i64 norm() const { return f == 1 ? p : p * p; }
  bool ramified() const { return e == 2; }

  bool operator==(const PrimeOfK&) const = default;
  // Deterministic order: by (p, f, root).
  bool operator<(const PrimeOfK& o) const {
    if (p != o.p) return p < o.p;
    if (f != o.f) return f < o.f;
    return root < o.root;
  }
};

std::vector<PrimeOfK> split_prime(const QuadField& K, i64 p);

static constexpr int kValInfinity = INT32_MAX;

// Exact P-adic valuation; kValInfinity at 0.
int valuation(const FieldElem& v, const PrimeOfK& P);
int valuation(const Rat& r, i64 p);

// Reduction map O_K,P -> F_{p^f}. Throws std::domain_error on negative
// valuation. The F_{p^2} target is Fq(p, 2) with its canonical modulus.
FqElem residue(const FieldElem& v, const PrimeOfK& P);
// Image of w in the residue field (an element of Fq(p, f)).
FqElem omega_image(const QuadField& K, const PrimeOfK& P);
// An integral element reducing to the given residue.
FieldElem lift_residue(const QuadField& K, const PrimeOfK& P, const FqElem& r);
// A uniformizer: valuation 1 at P (and 0 at the conjugate prime when split).
FieldElem uniformizer(const QuadField& K, const PrimeOfK& P);

// Fundamental unit of O_K (real K): smallest unit > 1 in the principal
// embedding. Continued-fraction expansion of w.
FieldElem fundamental_unit(const QuadField& K);

// Representatives of O_{K,S}^x / squares: subset products of {-1, eps} and,
// for each prime P above S, a generator of the smallest principal power P^k
// (k searched up to 6, loud failure beyond).
std::vector<FieldElem> s_unit_square_classes(const QuadField& K, const std::set<i64>& S);

}  // namespace hvn
