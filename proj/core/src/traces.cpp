#include "hvn/traces.hpp"

#include <cmath>
#include <map>

#include "hvn/parallel.hpp"
#include "hvn/rng.hpp"

namespace hvn {

namespace {

CurveOverFq reduce_model(const std::vector<FieldElem>& a, const PrimeOfK& P) {
  Fq F(P.p, P.f);
  return CurveOverFq(F, residue(a[0], P), residue(a[1], P), residue(a[2], P), residue(a[3], P),
                     residue(a[4], P));
}

}  // namespace

CurveOverFq reduce_at_good_prime(const CurveOverK& E, const PrimeOfK& P) {
  if (valuation(E.disc(), P) == 0) {
    // the model is already good at P
    return reduce_model({E.a1(), E.a2(), E.a3(), E.a4(), E.a6()}, P);
  }
  TateResult t = tate_reduce_model(E, P);
  if (t.info.kind != ReductionKind::Good)
    throw std::domain_error("reduce_at_good_prime: bad reduction above " + std::to_string(P.p));
  return reduce_model(t.a, P);
}

TraceRecord frobenius_trace(const CurveOverK& E, const PrimeOfK& P, u64 seed) {
  CurveOverFq Ep = reduce_at_good_prime(E, P);
  Rng rng(hash_combine(seed, {static_cast<u64>(P.p), static_cast<u64>(P.f), P.root,
                              static_cast<u64>(E.field().d)}));
  i64 q = P.norm();
  i64 n = count_points(Ep, rng);
  TraceRecord rec{P, q + 1 - n, q};
  HVN_CHECK(static_cast<Int>(rec.a) * rec.a <= Int(4) * q);
  return rec;
}

std::set<i64> disc_support(const CurveOverK& E) {
  Rat nd = E.disc().norm();
  std::set<i64> support;
  for (const auto& [p, e] : factor(Int(nd.get_num()))) {
    (void)e;
    HVN_CHECK(p.fits_slong_p());
    support.insert(p.get_si());
  }
  return support;
}

std::vector<TraceRecord> trace_sweep_primes(const CurveOverK& E, const std::vector<i64>& ps,
                                            const SweepConfig& cfg) {
  const QuadField& K = E.field();
  std::set<i64> local_support;
  if (!cfg.disc_support) local_support = disc_support(E);
  const std::set<i64>& support = cfg.disc_support ? *cfg.disc_support : local_support;
  std::vector<std::vector<TraceRecord>> slots(ps.size());
  parallel_for(ps.size(), cfg.threads, [&](std::size_t i) {
    i64 p = ps[i];
    for (const PrimeOfK& P : split_prime(K, p)) {
      if (support.count(p)) {
        // may be bad or non-minimal here; run the local algorithm
        TateResult t = tate_reduce_model(E, P);
        if (t.info.kind != ReductionKind::Good)
          throw std::domain_error("trace_sweep: bad reduction above " + std::to_string(p) +
                                  " (not above the excluded prime)");
        CurveOverFq Ep = reduce_model(t.a, P);
        Rng rng(hash_combine(cfg.seed, {static_cast<u64>(P.p), static_cast<u64>(P.f), P.root,
                                        static_cast<u64>(K.d)}));
        i64 q = P.norm();
        i64 n = count_points(Ep, rng);
        TraceRecord rec{P, q + 1 - n, q};
        HVN_CHECK(static_cast<Int>(rec.a) * rec.a <= Int(4) * q);
        slots[i].push_back(rec);
      } else {
        slots[i].push_back(frobenius_trace(E, P, cfg.seed));
      }
    }
  });
  std::vector<TraceRecord> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

std::vector<TraceRecord> trace_sweep(const CurveOverK& E, i64 exclude_ell,
                                     const SweepConfig& cfg) {
  std::vector<i64> ps;
  for (i64 p : primes_up_to(cfg.p_bound - 1))
    if (p != exclude_ell) ps.push_back(p);
  return trace_sweep_primes(E, ps, cfg);
}

TraceSet trace_set(const CurveOverK& E, i64 ell, const SweepConfig& cfg) {
  HVN_CHECK(ell >= 2 && is_prime(static_cast<u64>(ell)));
  TraceSet ts;
  ts.ell = ell;
  ts.p_bound = cfg.p_bound;
  std::set<i64> residues;
  auto records = trace_sweep(E, ell, cfg);
  for (const TraceRecord& r : records) {
    i64 v = ((r.a % ell) + ell) % ell;
    residues.insert(v);
  }
  ts.primes_used = static_cast<i64>(records.size());
  ts.residues.assign(residues.begin(), residues.end());
  return ts;
}

i64 predicted_trace(i64 q, i64 p, int f, i64 ell) {
  if (ell % 4 != 3) throw std::domain_error("predicted_trace: ell must be 3 mod 4");
  if (p == ell) throw std::domain_error("predicted_trace: p = ell");
  u64 base = static_cast<u64>(((q % ell) + ell) % ell);
  u64 power = powmod(base, static_cast<u64>((ell + 1) / 4), static_cast<u64>(ell));
  int chi = legendre(p, ell);
  i64 factor = 1 + (f % 2 == 0 ? chi * chi : chi);
  return static_cast<i64>((power * static_cast<u64>(factor)) % static_cast<u64>(ell));
}

bool cm_norm_identity(i64 a, i64 q, i64 order_disc) {
  HVN_CHECK(order_disc < 0);
  i64 t = 4 * q - a * a;
  if (t < 0) return false;
  i64 m = -order_disc;
  if (t % m != 0) return false;
  return is_square(Int(t / m));
}

}  // namespace hvn
