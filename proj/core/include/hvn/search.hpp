#pragma once

#include "hvn/cmsearch.hpp"

namespace hvn {

struct SearchConfig {
  i64 p_bound = 25000;
  u64 seed = 0;
  unsigned threads = 1;
};

struct SearchCurve {
  i64 D = 0, f = 1, m = 0;
  bool rational_j = false;
  std::string j_str;
  std::string u_str;               // twist representative
  std::vector<FieldElem> model;    // a1..a6 of the kept model
  i64 field_d = 0;                 // K = Q(sqrt(field_d))
  i64 field_disc = 0;
  std::set<i64> bad_primes;        // rational primes under bad reduction
  std::vector<i64> heavenly_ells;  // tests passed
  std::vector<HeavenlyVerdict> verdicts;
  std::vector<i64> fingerprint;    // Frobenius traces over shared primes
};

// One isogeny class of the search output.
struct SearchRow {
  std::vector<i64> ells;          // heavenly primes of the class
  i64 field_disc = 0;
  i64 m = 0;
  std::vector<i64> conductors;    // among irrational-j members
  bool star = false;              // everywhere good reduction
  i64 r_K = 0, r_Q = 0;
  int n_index = 1;
  std::vector<size_t> members;    // indices into SearchReport::curves
  std::string label() const;      // "47.5.1", "*6.24.1", ...
};

struct ExpectedRow {
  int classes;
  std::vector<i64> ells;
  i64 field_disc;
  i64 m;
  std::vector<i64> conductors;
  i64 r_K, r_Q;
  bool star;
};
const std::vector<ExpectedRow>& expected_isogeny_table();

struct SearchReport {
  std::vector<SearchCurve> curves;
  std::vector<SearchRow> rows;
  i64 total_r_K = 0, total_r_Q = 0;
  i64 class_count = 0;
  std::vector<std::string> flags;  // per-row deviations from the reference
  bool hard_rows_ok = false;       // 47.5.1, 6.24.1, *2.28.4, 7.61.1 matched
};

SearchReport run_search(const SearchConfig& cfg);

}  // namespace hvn
