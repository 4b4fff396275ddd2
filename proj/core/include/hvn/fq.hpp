#pragma once

#include <optional>
#include <vector>

#include "hvn/numutil.hpp"

namespace hvn {

// Element of F_p (b = 0) or F_{p^2} (a + b*t).
struct FqElem {
  u64 a = 0;
  u64 b = 0;
  bool operator==(const FqElem&) const = default;
};

// Arithmetic context for F_q, q = p^f with f in {1, 2}. For f = 2 the field
// is F_p[t]/(n(t)) with n the lexicographically least irreducible monic
// quadratic, so serialized elements are stable across runs.
class Fq {
 public:
  Fq(i64 p, int f);

  i64 p() const { return static_cast<i64>(p_); }
  int f() const { return f_; }
  u64 q() const { return q_; }
  // Reduction rule t^2 = s0 + s1*t for the modulus; (0,0) when f = 1.
  u64 modulus_s0() const { return s0_; }
  u64 modulus_s1() const { return s1_; }

  FqElem zero() const { return {0, 0}; }
  FqElem one() const { return {1, 0}; }
  FqElem make(u64 a, u64 b = 0) const { return {a % p_, f_ == 2 ? b % p_ : 0}; }
  FqElem from_int(const Int& n) const;

  bool is_zero(const FqElem& x) const { return x.a == 0 && x.b == 0; }
  FqElem add(FqElem x, FqElem y) const;
  FqElem sub(FqElem x, FqElem y) const;
  FqElem neg(FqElem x) const;
  FqElem mul(FqElem x, FqElem y) const;
  FqElem sqr(FqElem x) const { return mul(x, x); }
  FqElem inv(FqElem x) const;
  FqElem pow(FqElem x, u64 e) const;
  FqElem mul_int(FqElem x, i64 c) const;

  // Quadratic character: 0 at 0, else +-1. Requires odd p.
  int chi(const FqElem& x) const;
  // A square root when one exists (odd p).
  std::optional<FqElem> sqrt(const FqElem& x) const;
  // Some non-square element (odd p); deterministic.
  FqElem non_square() const;

  // All field elements in a fixed order (for small-q scans).
  std::vector<FqElem> all_elements() const;

 private:
  u64 p_;
  int f_;
  u64 q_;
  u64 s0_, s1_;
};

}  // namespace hvn
