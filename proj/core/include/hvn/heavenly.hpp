#pragma once

#include "hvn/traces.hpp"

namespace hvn {

enum class HeavenlyStatus { NotHeavenly, LikelyHeavenly, ProvenHeavenly };

const char* heavenly_status_name(HeavenlyStatus s);

struct HeavenlyVerdict {
  i64 ell = 0;
  HeavenlyStatus status = HeavenlyStatus::NotHeavenly;
  std::string reason;
  i64 evidence = 0;  // trace-set size, or exact torsion-field degree
  std::optional<PrimeOfK> witness;
};

// Trace-cardinality test at ell > 3: NotHeavenly when the sampled trace set
// exceeds (ell+1)/2 or some characteristic polynomial fails to split into
// cyclotomic-power eigenvalues mod ell; LikelyHeavenly otherwise (the test
// is one-sided). Bad reduction away from ell is a NotHeavenly witness.
HeavenlyVerdict heavenly_trace_test(const CurveOverK& E, i64 ell, const SweepConfig& cfg);

// Exact test at ell = 2: the splitting-field degree of the 2-division cubic
// must be a power of 2, i.e. the cubic needs a root in K.
HeavenlyVerdict two_torsion_heavenly(const CurveOverK& E,
                                     const std::set<i64>* disc_support = nullptr);

// Sampling filter at ell = 3: every Frobenius characteristic polynomial must
// split as (T - q^i)(T - q^(1-i)) mod 3, i.e. a == 1 + q (mod 3).
HeavenlyVerdict three_torsion_heavenly_sample(const CurveOverK& E, const SweepConfig& cfg);

// Roots in K of the monic cubic t^3 + c2 t^2 + c1 t + c0 with integral
// coefficients (modular lifting, exact verification).
std::vector<FieldElem> monic_cubic_roots(const QuadField& K, const FieldElem& c2,
                                         const FieldElem& c1, const FieldElem& c0);

}  // namespace hvn
