#include <mpfr.h>

#include <cmath>

#include "hvn/cmsearch.hpp"

namespace hvn {

namespace {

// Minimal RAII wrapper over mpfr_t at a fixed working precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re, im;
  Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
};

void cmul(Complex& out, const Complex& a, const Complex& b, Real& t1, Real& t2) {
  // out = a * b; out must not alias a or b
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(out.re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), t1.get(), t2.get(), MPFR_RNDN);
}

// j(tau) for the reduced form (a, b, c) of discriminant D, via the
// q-expansion: q = exp(-pi sqrt|D|/a) * e^{-i pi b / a}.
Complex eval_j(i64 a, i64 b, i64 absD, mpfr_prec_t prec) {
  // series length: terms decay like exp(4 pi sqrt(n) - X n), X = pi sqrt|D|/a
  double X = 3.14159265358979 * std::sqrt(static_cast<double>(absD)) / static_cast<double>(a);
  double need = static_cast<double>(prec) * 0.6931 + 40.0;
  size_t N = 8;
  while (X * static_cast<double>(N) - 4 * 3.1416 * std::sqrt(static_cast<double>(N)) < need) ++N;
  const std::vector<Int> c = j_series_coefficients(N + 1);

  Real pi(prec), t1(prec), t2(prec), r(prec), theta(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  // r = exp(-pi sqrt|D| / a)
  mpfr_set_si(t1.get(), static_cast<long>(absD), MPFR_RNDN);
  mpfr_sqrt(t1.get(), t1.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), t1.get(), pi.get(), MPFR_RNDN);
  mpfr_div_si(t1.get(), t1.get(), static_cast<long>(a), MPFR_RNDN);
  mpfr_neg(t1.get(), t1.get(), MPFR_RNDN);
  mpfr_exp(r.get(), t1.get(), MPFR_RNDN);
  // theta = -pi b / a
  mpfr_mul_si(theta.get(), pi.get(), static_cast<long>(-b), MPFR_RNDN);
  mpfr_div_si(theta.get(), theta.get(), static_cast<long>(a), MPFR_RNDN);

  Complex q(prec);
  mpfr_cos(t1.get(), theta.get(), MPFR_RNDN);
  mpfr_mul(q.re.get(), r.get(), t1.get(), MPFR_RNDN);
  mpfr_sin(t1.get(), theta.get(), MPFR_RNDN);
  mpfr_mul(q.im.get(), r.get(), t1.get(), MPFR_RNDN);

  // Horner over c_N .. c_0, then add 1/q
  Complex s(prec), tmp(prec);
  mpfr_set_z(s.re.get(), Int(c[N]).get_mpz_t(), MPFR_RNDN);
  mpfr_set_ui(s.im.get(), 0, MPFR_RNDN);
  for (size_t n = N; n-- > 0;) {
    cmul(tmp, s, q, t1, t2);
    mpfr_set_z(s.re.get(), Int(c[n]).get_mpz_t(), MPFR_RNDN);
    mpfr_set_ui(s.im.get(), 0, MPFR_RNDN);
    mpfr_add(s.re.get(), s.re.get(), tmp.re.get(), MPFR_RNDN);
    mpfr_set(s.im.get(), tmp.im.get(), MPFR_RNDN);
  }
  // 1/q = conj(q) / |q|^2
  Real qq(prec);
  mpfr_mul(t1.get(), q.re.get(), q.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), q.im.get(), q.im.get(), MPFR_RNDN);
  mpfr_add(qq.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_div(t1.get(), q.re.get(), qq.get(), MPFR_RNDN);
  mpfr_add(s.re.get(), s.re.get(), t1.get(), MPFR_RNDN);
  mpfr_div(t2.get(), q.im.get(), qq.get(), MPFR_RNDN);
  mpfr_sub(s.im.get(), s.im.get(), t2.get(), MPFR_RNDN);
  return s;
}

// nearest integer and the distance to it
std::pair<Int, double> round_to_int(const Real& x) {
  Real r(mpfr_get_prec(x.get())), diff(mpfr_get_prec(x.get()));
  mpfr_round(r.get(), x.get());
  Int out;
  mpfr_get_z(out.get_mpz_t(), r.get(), MPFR_RNDN);
  mpfr_sub(diff.get(), x.get(), r.get(), MPFR_RNDN);
  return {out, std::fabs(mpfr_get_d(diff.get(), MPFR_RNDN))};
}

}  // namespace

std::vector<Int> hilbert_class_poly(i64 D) {
  auto forms = reduced_forms(D);
  size_t h = forms.size();
  HVN_CHECK(h >= 1);
  for (mpfr_prec_t prec = 128; prec <= (1 << 15); prec *= 2) {
    // expand prod (x - j_i) with complex coefficients
    std::vector<Complex> coeffs;  // ascending, degree h
    coeffs.emplace_back(prec);
    mpfr_set_ui(coeffs[0].re.get(), 1, MPFR_RNDN);
    mpfr_set_ui(coeffs[0].im.get(), 0, MPFR_RNDN);
    Real t1(prec), t2(prec);
    for (const auto& [a, b, c] : forms) {
      (void)c;
      Complex j = eval_j(a, b, -D, prec);
      // multiply the polynomial by (x - j)
      std::vector<Complex> next;
      for (size_t i = 0; i <= coeffs.size(); ++i) {
        next.emplace_back(prec);
        mpfr_set_ui(next.back().re.get(), 0, MPFR_RNDN);
        mpfr_set_ui(next.back().im.get(), 0, MPFR_RNDN);
      }
      for (size_t i = 0; i < coeffs.size(); ++i) {
        // next[i+1] += coeffs[i]; next[i] -= coeffs[i] * j
        mpfr_add(next[i + 1].re.get(), next[i + 1].re.get(), coeffs[i].re.get(), MPFR_RNDN);
        mpfr_add(next[i + 1].im.get(), next[i + 1].im.get(), coeffs[i].im.get(), MPFR_RNDN);
        Complex prod(prec);
        cmul(prod, coeffs[i], j, t1, t2);
        mpfr_sub(next[i].re.get(), next[i].re.get(), prod.re.get(), MPFR_RNDN);
        mpfr_sub(next[i].im.get(), next[i].im.get(), prod.im.get(), MPFR_RNDN);
      }
      coeffs = std::move(next);
    }
    // check convergence to integers
    bool ok = true;
    std::vector<Int> out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
      auto [value, gap] = round_to_int(coeffs[i].re);
      double imag = std::fabs(mpfr_get_d(coeffs[i].im.get(), MPFR_RNDN));
      if (gap > 1e-4 || imag > 1e-4) {
        ok = false;
        break;
      }
      out.push_back(value);
    }
    if (ok) {
      HVN_CHECK(out.back() == 1);
      return out;
    }
  }
  throw std::domain_error("hilbert_class_poly: precision ladder exhausted");
}

HilbertRoots hilbert_roots(i64 D) {
  auto poly = hilbert_class_poly(D);
  HVN_CHECK(poly.size() == 3);  // degree 2
  Int C = poly[0], B = poly[1];
  Int disc = B * B - 4 * C;
  HVN_CHECK(disc > 0);
  HVN_CHECK(!is_square(disc));  // irreducible over Q for h = 2
  // disc = s^2 * d0 with d0 small: scan squarefree candidates
  i64 d0 = 0;
  Int s;
  for (i64 cand = 2; cand <= 3000; ++cand) {
    if (!is_squarefree(Int(static_cast<long>(cand)))) continue;
    if (disc % cand != 0) continue;
    Int quot = disc / cand;
    if (is_square(quot)) {
      d0 = cand;
      s = isqrt(quot);
      break;
    }
  }
  HVN_CHECK(d0 != 0);
  HilbertRoots out;
  out.d0 = d0;
  QuadField K = make_field(d0);
  FieldElem sq = sqrt_d(K);
  out.j1 = (elem(K, Rat(-B), Rat(0)) + sq * Rat(s)) / Rat(2);
  out.j2 = (elem(K, Rat(-B), Rat(0)) - sq * Rat(s)) / Rat(2);
  HVN_CHECK(out.j1.is_integral() && out.j2.is_integral());
  // exact verification against the polynomial
  for (const FieldElem& j : {out.j1, out.j2}) {
    FieldElem val = j * j + j * Rat(B) + elem(K, Rat(C), Rat(0));
    HVN_CHECK(val.is_zero());
  }
  return out;
}

}  // namespace hvn
