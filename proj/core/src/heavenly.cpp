#include "hvn/heavenly.hpp"

#include <map>

namespace hvn {

const char* heavenly_status_name(HeavenlyStatus s) {
  switch (s) {
    case HeavenlyStatus::NotHeavenly: return "not_heavenly";
    case HeavenlyStatus::LikelyHeavenly: return "likely_heavenly";
    case HeavenlyStatus::ProvenHeavenly: return "proven_heavenly";
  }
  return "?";
}

namespace {

// Arithmetic in (Z/P)[T]/(m(T)), elements as coordinate pairs u + v*w.
struct ModRing {
  Int P;
  Int tr, nm;

  Int norm(const std::pair<Int, Int>& x) const {
    return mod(x.first * x.first + tr * x.first * x.second + nm * x.second * x.second);
  }
  Int mod(const Int& a) const {
    Int r = a % P;
    if (r < 0) r += P;
    return r;
  }
  std::pair<Int, Int> make(const Int& u, const Int& v) const { return {mod(u), mod(v)}; }
  std::pair<Int, Int> add(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) const {
    return {mod(a.first + b.first), mod(a.second + b.second)};
  }
  std::pair<Int, Int> sub(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) const {
    return {mod(a.first - b.first), mod(a.second - b.second)};
  }
  std::pair<Int, Int> mul(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) const {
    Int vv = a.second * b.second;
    return {mod(a.first * b.first - nm * vv),
            mod(a.first * b.second + a.second * b.first + tr * vv)};
  }
  std::pair<Int, Int> inv(const std::pair<Int, Int>& a) const {
    // conj / norm
    Int n = norm(a);
    Int ninv;
    int ok = mpz_invert(ninv.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t());
    HVN_CHECK(ok != 0);
    std::pair<Int, Int> conj = {mod(a.first + tr * a.second), mod(-a.second)};
    return {mod(conj.first * ninv), mod(conj.second * ninv)};
  }
};

Int coeff_height(const FieldElem& c, const Int& sqd) {
  HVN_CHECK(c.is_integral());
  return abs(Int(c.x.get_num())) + abs(Int(c.y.get_num())) * (sqd + 2);
}

}  // namespace

std::vector<FieldElem> monic_cubic_roots(const QuadField& K, const FieldElem& c2,
                                         const FieldElem& c1, const FieldElem& c0) {
  // disc of t^3 + a t^2 + b t + c
  const FieldElem &a = c2, &b = c1, &c = c0;
  FieldElem disc = (a * b * c) * Rat(18) - a.pow(3) * c * Rat(4) + (a * a) * (b * b) -
                   b.pow(3) * Rat(4) - (c * c) * Rat(27);
  HVN_CHECK(!disc.is_zero());

  // an inert prime where the cubic stays separable
  PrimeOfK P{};
  bool found_p = false;
  for (i64 p : primes_up_to(400)) {
    if (p < 5) continue;
    auto primes = split_prime(K, p);
    if (primes.size() != 1 || primes[0].f != 2) continue;
    if (valuation(disc, primes[0]) != 0) continue;
    P = primes[0];
    found_p = true;
    break;
  }
  HVN_CHECK(found_p);

  // roots of the reduced cubic in F_{p^2}
  Fq F(P.p, P.f);
  FqElem r2 = residue(c2, P), r1 = residue(c1, P), r0 = residue(c0, P);
  std::vector<FqElem> start;
  for (const FqElem& x : F.all_elements()) {
    FqElem val = F.add(F.add(F.mul(F.add(x, r2), F.sqr(x)), F.mul(r1, x)), r0);
    if (F.is_zero(val)) start.push_back(x);
  }

  // coordinate bound for any root of the cubic
  Int sqd = isqrt(Int(std::abs(K.d)));
  Int height = 1 + std::max(coeff_height(c2, sqd), std::max(coeff_height(c1, sqd), coeff_height(c0, sqd)));
  Int bound = height * (2 * sqd + 8);

  std::vector<FieldElem> roots;
  for (const FqElem& s : start) {
    // Newton-lift the coordinate pair until the modulus covers the bound
    FieldElem s_lift = lift_residue(K, P, s);
    ModRing R{Int(static_cast<long>(P.p)), Int(static_cast<long>(K.tr_omega())),
              Int(static_cast<long>(K.nm_omega()))};
    std::pair<Int, Int> x = R.make(Int(s_lift.x.get_num()), Int(s_lift.y.get_num()));
    auto C2 = std::make_pair(Int(c2.x.get_num()), Int(c2.y.get_num()));
    auto C1 = std::make_pair(Int(c1.x.get_num()), Int(c1.y.get_num()));
    auto C0 = std::make_pair(Int(c0.x.get_num()), Int(c0.y.get_num()));
    while (R.P <= 2 * bound + 1) {
      R.P = R.P * R.P;
      auto f = R.add(R.mul(R.add(x, R.make(C2.first, C2.second)), R.mul(x, x)),
                     R.add(R.mul(R.make(C1.first, C1.second), x), R.make(C0.first, C0.second)));
      // f' = 3x^2 + 2 c2 x + c1
      auto fp = R.add(R.add(R.mul(R.make(3, 0), R.mul(x, x)),
                            R.mul(R.make(2 * C2.first, 2 * C2.second), x)),
                      R.make(C1.first, C1.second));
      x = R.sub(x, R.mul(f, R.inv(fp)));
    }
    // symmetric representatives
    Int u = x.first > R.P / 2 ? x.first - R.P : x.first;
    Int v = x.second > R.P / 2 ? x.second - R.P : x.second;
    if (abs(u) > bound || abs(v) > bound) continue;
    FieldElem cand = elem(K, Rat(u), Rat(v));
    FieldElem val = (cand + c2) * cand * cand + c1 * cand + c0;
    if (val.is_zero()) roots.push_back(cand);
  }
  return roots;
}

HeavenlyVerdict two_torsion_heavenly(const CurveOverK& E, const std::set<i64>* support) {
  HeavenlyVerdict v;
  v.ell = 2;
  GoodOutsideReport rep = good_outside(E, {2}, support);
  if (!rep.ok) {
    v.status = HeavenlyStatus::NotHeavenly;
    v.reason = "bad reduction away from 2";
    v.witness = rep.witnesses.front();
    return v;
  }
  // 2-division cubic, made monic: t = 4x solves t^3 + b2 t^2 + 8 b4 t + 16 b6
  auto roots = monic_cubic_roots(E.field(), E.b2(), E.b4() * Rat(8), E.b6() * Rat(16));
  HVN_CHECK(roots.size() != 2);
  if (!roots.empty()) {
    v.status = HeavenlyStatus::ProvenHeavenly;
    v.evidence = roots.size() == 3 ? 1 : 2;  // splitting field degree
    v.reason = "2-division field has 2-power degree";
    return v;
  }
  // irreducible cubic: degree 3 when disc is a square in K, else 6
  const FieldElem a = E.b2(), b = E.b4() * Rat(8), c = E.b6() * Rat(16);
  FieldElem disc = (a * b * c) * Rat(18) - a.pow(3) * c * Rat(4) + (a * a) * (b * b) -
                   b.pow(3) * Rat(4) - (c * c) * Rat(27);
  v.status = HeavenlyStatus::NotHeavenly;
  v.evidence = field_sqrt(disc).has_value() ? 3 : 6;
  v.reason = "2-division field degree is not a 2-power";
  return v;
}

namespace {

// rational primes < p_bound, excluding ell, split into blocks so the sweep
// can stop as soon as a verdict is certain
std::vector<std::vector<i64>> prime_blocks(i64 p_bound, i64 exclude, size_t block) {
  std::vector<std::vector<i64>> out;
  std::vector<i64> cur;
  for (i64 p : primes_up_to(p_bound - 1)) {
    if (p == exclude) continue;
    cur.push_back(p);
    if (cur.size() == block) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

HeavenlyVerdict three_torsion_heavenly_sample(const CurveOverK& E, const SweepConfig& cfg) {
  HeavenlyVerdict v;
  v.ell = 3;
  GoodOutsideReport rep = good_outside(E, {3}, cfg.disc_support);
  if (!rep.ok) {
    v.status = HeavenlyStatus::NotHeavenly;
    v.reason = "bad reduction away from 3";
    v.witness = rep.witnesses.front();
    return v;
  }
  i64 sampled = 0;
  for (const auto& block : prime_blocks(cfg.p_bound, 3, 64)) {
    auto records = trace_sweep_primes(E, block, cfg);
    for (const TraceRecord& r : records) {
      ++sampled;
      // split with cyclotomic-power eigenvalues: a == q^i + q^(1-i) == 1 + q
      if (((r.a - 1 - r.q) % 3) != 0) {
        v.status = HeavenlyStatus::NotHeavenly;
        v.reason = "characteristic polynomial does not split with cyclotomic powers mod 3";
        v.witness = r.prime;
        return v;
      }
    }
  }
  v.status = HeavenlyStatus::LikelyHeavenly;
  v.evidence = sampled;
  v.reason = "all sampled characteristic polynomials split mod 3";
  return v;
}

HeavenlyVerdict heavenly_trace_test(const CurveOverK& E, i64 ell, const SweepConfig& cfg) {
  HVN_CHECK(ell > 3 && is_prime(static_cast<u64>(ell)));
  HeavenlyVerdict v;
  v.ell = ell;
  GoodOutsideReport rep = good_outside(E, {ell}, cfg.disc_support);
  if (!rep.ok) {
    v.status = HeavenlyStatus::NotHeavenly;
    v.reason = "bad reduction away from " + std::to_string(ell);
    v.witness = rep.witnesses.front();
    return v;
  }
  std::set<i64> residues;
  std::map<i64, std::set<i64>> allowed;  // q mod ell -> {q^i + q^(1-i)}
  for (const auto& block : prime_blocks(cfg.p_bound, ell, 128)) {
    auto records = trace_sweep_primes(E, block, cfg);
    for (const TraceRecord& r : records) {
      residues.insert(((r.a % ell) + ell) % ell);
      // secondary filter: traces must look like q^i + q^(1-i) mod ell
      i64 qr = ((r.q % ell) + ell) % ell;
      auto it = allowed.find(qr);
      if (it == allowed.end()) {
        std::set<i64> vals;
        u64 qe = static_cast<u64>(qr);
        for (i64 i = 0; i < ell - 1; ++i) {
          u64 a = powmod(qe, static_cast<u64>(i), static_cast<u64>(ell));
          u64 b = powmod(qe, static_cast<u64>(((1 - i) % (ell - 1) + (ell - 1)) % (ell - 1)),
                         static_cast<u64>(ell));
          vals.insert(static_cast<i64>((a + b) % static_cast<u64>(ell)));
        }
        it = allowed.emplace(qr, std::move(vals)).first;
      }
      if (!it->second.count(((r.a % ell) + ell) % ell)) {
        v.status = HeavenlyStatus::NotHeavenly;
        v.reason = "characteristic polynomial does not split with cyclotomic powers mod ell";
        v.witness = r.prime;
        v.evidence = static_cast<i64>(residues.size());
        return v;
      }
    }
    if (static_cast<i64>(residues.size()) > (ell + 1) / 2) break;
  }
  v.evidence = static_cast<i64>(residues.size());
  if (v.evidence > (ell + 1) / 2) {
    v.status = HeavenlyStatus::NotHeavenly;
    v.reason = "trace set exceeds (ell+1)/2";
    return v;
  }
  v.status = HeavenlyStatus::LikelyHeavenly;
  v.reason = "trace set within (ell+1)/2 over the sampled range";
  return v;
}

}  // namespace hvn
