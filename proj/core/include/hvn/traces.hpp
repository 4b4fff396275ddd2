#pragma once

#include "hvn/ellcurve.hpp"
#include "hvn/pointcount.hpp"

namespace hvn {

struct TraceRecord {
  PrimeOfK prime;
  i64 a = 0;  // Frobenius trace: q + 1 - #E(F_q)
  i64 q = 0;
};

struct TraceSet {
  i64 ell = 0;
  std::vector<i64> residues;  // sorted, in [0, ell)
  i64 primes_used = 0;
  i64 p_bound = 0;
};

struct SweepConfig {
  i64 p_bound = 25000;
  u64 seed = 0;
  unsigned threads = 1;
  // Known support of norm(disc) (primes where the model may be bad or
  // non-minimal); avoids refactoring gigantic discriminants per sweep.
  const std::set<i64>* disc_support = nullptr;
};

// The good reduction of E at P as a curve over the residue field; throws
// std::domain_error at a bad prime. Uses the Tate-minimal local model at
// primes dividing norm(disc).
CurveOverFq reduce_at_good_prime(const CurveOverK& E, const PrimeOfK& P);

TraceRecord frobenius_trace(const CurveOverK& E, const PrimeOfK& P, u64 seed = 0);

// Frobenius traces over all primes of K above p < p_bound, p != exclude_ell,
// where E has good reduction. Bad primes not above exclude_ell throw.
// Deterministic order: ascending (p, f, root).
std::vector<TraceRecord> trace_sweep(const CurveOverK& E, i64 exclude_ell,
                                     const SweepConfig& cfg);

// Same, over an explicit list of rational primes.
std::vector<TraceRecord> trace_sweep_primes(const CurveOverK& E, const std::vector<i64>& ps,
                                            const SweepConfig& cfg);

// Support of norm(disc): rational primes where the model could be bad or
// non-minimal.
std::set<i64> disc_support(const CurveOverK& E);

TraceSet trace_set(const CurveOverK& E, i64 ell, const SweepConfig& cfg);

// Balanced-curve prediction q^((ell+1)/4) * (1 + (p/ell)^f) mod ell,
// for ell == 3 mod 4 and p != ell.
i64 predicted_trace(i64 q, i64 p, int f, i64 ell);

// 4q = a^2 + |D| v^2 solvable: (4q - a^2)/|D| a nonnegative perfect square.
bool cm_norm_identity(i64 a, i64 q, i64 order_disc);

}  // namespace hvn
