#include "hvn/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hvn/parallel.hpp"

namespace hvn {

namespace {

std::set<i64> prime_support(const Int& n) {
  std::set<i64> out;
  if (n == 0) return out;
  for (const auto& [p, e] : factor(n)) {
    (void)e;
    HVN_CHECK(p.fits_slong_p());
    out.insert(p.get_si());
  }
  return out;
}

struct PoolEntry {
  FieldElem j;
  i64 D, f, m;
  bool rational_j;
};

// Everything known about one twisted candidate before classification.
struct Candidate {
  PoolEntry src;
  FieldElem u;
  CurveOverK curve;
  std::set<i64> support;  // rational primes dividing norm(disc)
  std::set<i64> bad;      // rational primes under bad reduction
};

// All quadratic twists of the base model for `entry` with bad reduction
// above at most one rational prime.
std::vector<Candidate> viable_twists(const QuadField& K, const PoolEntry& entry,
                                     const SearchConfig& cfg) {
  CurveOverK base = curve_from_j(entry.j);
  // support of norm(disc) = 12^12 N(j)^2 N(j-1728)^9 (times the twist)
  std::set<i64> base_support = {2, 3};
  Rat nj = entry.j.norm();
  Rat nj1728 = (entry.j - elem(K, 1728)).norm();
  for (i64 p : prime_support(Int(nj.get_num()))) base_support.insert(p);
  for (i64 p : prime_support(Int(nj1728.get_num()))) base_support.insert(p);

  std::set<i64> s_rat = {2};
  for (i64 p : base_support) {
    for (const PrimeOfK& P : split_prime(K, p)) {
      if (tate_reduce(base, P).kind != ReductionKind::Good) {
        s_rat.insert(p);
        break;
      }
    }
  }
  for (i64 p : prime_support(Int(static_cast<long>(entry.f)))) s_rat.insert(p);
  for (i64 p : prime_support(Int(static_cast<long>(entry.m)))) s_rat.insert(p);

  std::vector<FieldElem> twists = s_unit_square_classes(K, s_rat);
  std::set<i64> candidate_primes = base_support;
  for (i64 p : s_rat) candidate_primes.insert(p);

  std::vector<std::optional<Candidate>> slots(twists.size());
  parallel_for(twists.size(), cfg.threads, [&](std::size_t i) {
    const FieldElem& u = twists[i];
    CurveOverK cur = quadratic_twist(base, u);
    std::set<i64> bad;
    for (i64 p : candidate_primes) {
      for (const PrimeOfK& P : split_prime(K, p)) {
        if (tate_reduce(cur, P).kind != ReductionKind::Good) {
          bad.insert(p);
          break;
        }
      }
      if (bad.size() > 1) break;
    }
    if (bad.size() > 1) return;
    Candidate cand{entry, u, cur, {}, bad};
    cand.support = candidate_primes;
    for (i64 p : prime_support(Int(u.norm().get_num()))) cand.support.insert(p);
    slots[i] = std::move(cand);
  });
  std::vector<Candidate> out;
  for (auto& s : slots)
    if (s.has_value()) out.push_back(std::move(*s));
  return out;
}

// Heavenly classification of one candidate; the returned list holds the
// verdicts actually computed and the passing primes.
std::pair<std::vector<i64>, std::vector<HeavenlyVerdict>> classify(
    const Candidate& cand, const CMOrderDisc& order, const SearchConfig& cfg) {
  SweepConfig sweep;
  sweep.p_bound = cfg.p_bound;
  sweep.seed = cfg.seed;
  sweep.threads = 1;  // parallelism lives on the outer loops
  sweep.disc_support = &cand.support;

  std::vector<i64> candidates;
  if (cand.bad.empty()) {
    candidates = isogeny_prime_candidates(order);
  } else {
    candidates = {*cand.bad.begin()};
  }
  std::vector<i64> passing;
  std::vector<HeavenlyVerdict> verdicts;
  for (i64 ell : candidates) {
    HeavenlyVerdict v;
    if (ell == 2) {
      v = two_torsion_heavenly(cand.curve, &cand.support);
    } else if (ell == 3) {
      v = three_torsion_heavenly_sample(cand.curve, sweep);
    } else {
      v = heavenly_trace_test(cand.curve, ell, sweep);
    }
    verdicts.push_back(v);
    if (v.status != HeavenlyStatus::NotHeavenly) passing.push_back(ell);
  }
  return {passing, verdicts};
}

std::vector<i64> fingerprint_primes() {
  std::vector<i64> out;
  for (i64 p : primes_up_to(1300))
    if (p > 1000) out.push_back(p);
  return out;
}

}  // namespace

std::string SearchRow::label() const {
  std::ostringstream os;
  if (star) os << "*";
  i64 l = 1;
  for (i64 e : ells) l *= e;
  os << l << "." << field_disc << "." << n_index;
  return os.str();
}

const std::vector<ExpectedRow>& expected_isogeny_table() {
  static const std::vector<ExpectedRow> table = {
      {4, {2}, 5, 10, {1}, 4, 0, false},     {4, {2}, 5, 5, {1}, 4, 0, false},
      {4, {2}, 8, 2, {2}, 4, 2, false},      {4, {2}, 8, 1, {4}, 4, 4, false},
      {4, {2}, 12, 3, {4}, 4, 4, false},     {4, {2}, 13, 13, {1}, 4, 0, false},
      {3, {2}, 24, 2, {3}, 4, 2, false},     {3, {2}, 28, 7, {4}, 4, 4, false},
      {1, {2}, 28, 7, {4}, 4, 4, true},      {4, {2}, 29, 58, {1}, 4, 0, false},
      {4, {2}, 37, 37, {1}, 4, 0, false},    {1, {3}, 5, 15, {1, 2}, 8, 0, false},
      {1, {3}, 8, 6, {1}, 4, 0, false},      {1, {3}, 12, 1, {3}, 4, 2, false},
      {1, {3}, 17, 51, {1}, 4, 0, false},    {1, {3}, 33, 11, {3}, 4, 2, true},
      {1, {3}, 41, 123, {1}, 4, 0, false},   {1, {3}, 89, 267, {1}, 4, 0, false},
      {1, {2, 3}, 24, 2, {3}, 4, 2, true},   {1, {7}, 5, 35, {1}, 4, 0, false},
      {1, {7}, 13, 91, {1}, 4, 0, false},    {1, {7}, 21, 3, {7}, 4, 2, false},
      {1, {7}, 28, 7, {4}, 4, 4, false},     {1, {7}, 61, 427, {1}, 4, 0, false},
      {1, {11}, 8, 22, {1}, 4, 0, false},    {1, {11}, 17, 187, {1}, 4, 0, false},
      {1, {11}, 33, 11, {3}, 4, 2, false},   {1, {23}, 5, 115, {1}, 4, 0, false},
      {1, {31}, 13, 403, {1}, 4, 0, false},  {1, {47}, 5, 235, {1}, 4, 0, false},
  };
  return table;
}

SearchReport run_search(const SearchConfig& cfg) {
  SearchReport report;

  // Order discriminants of class number 2, grouped by CM field.
  std::map<i64, std::vector<CMOrderDisc>> by_field;  // fund_disc -> orders
  for (const CMOrderDisc& d : class_number_2_discs()) by_field[d.fund_disc].push_back(d);

  struct Job {
    QuadField K;
    PoolEntry entry;
    CMOrderDisc order;
  };
  std::vector<Job> jobs;
  for (const auto& [fund, orders] : by_field) {
    // real quadratic fields arising from the h = 2 conductors
    std::map<i64, std::vector<CMOrderDisc>> by_d0;
    std::map<i64, HilbertRoots> roots;
    for (const CMOrderDisc& order : orders) {
      HilbertRoots r = hilbert_roots(order.D);
      roots[order.D] = r;
      by_d0[r.d0].push_back(order);
    }
    for (const auto& [d0, field_orders] : by_d0) {
      QuadField K = make_field(d0);
      for (const CMOrderDisc& order : field_orders) {
        const HilbertRoots& r = roots[order.D];
        for (const FieldElem& j : {r.j1, r.j2})
          jobs.push_back({K, {j, order.D, order.f, order.m, false}, order});
      }
      // rational j-invariants from the class-number-1 orders of L
      const CMOrderDisc& rep = field_orders.front();
      for (i64 f1 : class_number_1_conductors(fund)) {
        auto poly = hilbert_class_poly(f1 * f1 * fund);
        HVN_CHECK(poly.size() == 2);
        Int j = -poly[0];
        CMOrderDisc o1 = order_data(f1 * f1 * fund);
        jobs.push_back({K, {elem(K, Rat(j), Rat(0)), o1.D, o1.f, o1.m, true}, rep});
      }
    }
  }

  // Twist enumeration, good-reduction filter, heavenly classification.
  std::vector<i64> fps = fingerprint_primes();
  for (const Job& job : jobs) {
    std::vector<Candidate> cands = viable_twists(job.K, job.entry, cfg);
    std::vector<std::optional<SearchCurve>> slots(cands.size());
    parallel_for(cands.size(), cfg.threads, [&](std::size_t i) {
      const Candidate& cand = cands[i];
      // the isogeny-candidate heuristic uses the order of the twisted curve
      CMOrderDisc order = order_data(cand.src.D);
      auto [passing, verdicts] = classify(cand, order, cfg);
      if (passing.empty()) return;
      SearchCurve sc;
      sc.D = cand.src.D;
      sc.f = cand.src.f;
      sc.m = cand.src.m;
      sc.rational_j = cand.src.rational_j;
      sc.j_str = cand.src.j.str();
      sc.u_str = cand.u.str();
      sc.model = {cand.curve.a1(), cand.curve.a2(), cand.curve.a3(), cand.curve.a4(),
                  cand.curve.a6()};
      sc.field_d = job.K.d;
      sc.field_disc = job.K.disc;
      sc.bad_primes = cand.bad;
      sc.heavenly_ells = passing;
      sc.verdicts = verdicts;
      SweepConfig sweep;
      sweep.seed = cfg.seed;
      sweep.threads = 1;
      sweep.disc_support = &cand.support;
      for (const TraceRecord& r : trace_sweep_primes(cand.curve, fps, sweep))
        sc.fingerprint.push_back(r.a);
      slots[i] = std::move(sc);
    });
    for (auto& s : slots)
      if (s.has_value()) report.curves.push_back(std::move(*s));
  }

  // Group into isogeny classes by (field, CM field, bad set, fingerprint).
  std::map<std::tuple<i64, i64, std::vector<i64>, std::vector<i64>>, std::vector<size_t>> classes;
  for (size_t i = 0; i < report.curves.size(); ++i) {
    const SearchCurve& c = report.curves[i];
    std::vector<i64> bad(c.bad_primes.begin(), c.bad_primes.end());
    classes[{c.field_disc, c.m, bad, c.fingerprint}].push_back(i);
  }
  for (auto& [key, members] : classes) {
    SearchRow row;
    row.field_disc = std::get<0>(key);
    row.m = std::get<1>(key);
    row.star = std::get<2>(key).empty();
    std::set<i64> conductors, ells;
    for (size_t i : members) {
      const SearchCurve& c = report.curves[i];
      if (c.rational_j) {
        row.r_Q += 1;
      } else {
        row.r_K += 1;
        conductors.insert(c.f);
      }
      for (i64 l : c.heavenly_ells) ells.insert(l);
    }
    row.conductors.assign(conductors.begin(), conductors.end());
    row.ells.assign(ells.begin(), ells.end());
    row.members = members;
    // classes made only of rational-j curves are base changes from Q
    if (row.r_K == 0) continue;
    // members must agree on the heavenly primes
    for (size_t i : members) {
      const SearchCurve& c = report.curves[i];
      if (std::vector<i64>(c.heavenly_ells.begin(), c.heavenly_ells.end()) != row.ells) {
        std::ostringstream os;
        os << "class " << row.field_disc << "/" << row.m
           << ": members disagree on heavenly primes";
        report.flags.push_back(os.str());
        break;
      }
    }
    report.rows.push_back(std::move(row));
  }

  // Deterministic row order and n-indexing within (ell-label, field).
  std::sort(report.rows.begin(), report.rows.end(), [&](const SearchRow& a, const SearchRow& b) {
    if (a.ells != b.ells) return a.ells < b.ells;
    if (a.field_disc != b.field_disc) return a.field_disc < b.field_disc;
    if (a.m != b.m) return a.m < b.m;
    return report.curves[a.members.front()].fingerprint <
           report.curves[b.members.front()].fingerprint;
  });
  std::map<std::pair<std::vector<i64>, i64>, int> counters;
  for (SearchRow& row : report.rows) {
    row.n_index = ++counters[{row.ells, row.field_disc}];
    report.total_r_K += row.r_K;
    report.total_r_Q += row.r_Q;
  }
  report.class_count = static_cast<i64>(report.rows.size());

  // Compare against the reference table.
  std::vector<int> used(report.rows.size(), 0);
  auto row_matches = [&](const ExpectedRow& e, const SearchRow& r) {
    return e.ells == r.ells && e.field_disc == r.field_disc && e.m == r.m &&
           e.conductors == r.conductors && e.r_K == r.r_K && e.r_Q == r.r_Q && e.star == r.star;
  };
  bool hard_ok = true;
  for (const ExpectedRow& e : expected_isogeny_table()) {
    int found = 0;
    for (size_t i = 0; i < report.rows.size(); ++i) {
      if (!used[i] && row_matches(e, report.rows[i])) {
        used[i] = 1;
        ++found;
        if (found == e.classes) break;
      }
    }
    if (found != e.classes) {
      std::ostringstream os;
      os << "reference row (ell=";
      for (i64 l : e.ells) os << l << " ";
      os << "disc=" << e.field_disc << " m=" << e.m << " rK=" << e.r_K << " rQ=" << e.r_Q
         << (e.star ? " star" : "") << "): matched " << found << " of " << e.classes
         << " classes";
      report.flags.push_back(os.str());
      bool hard = (e.ells == std::vector<i64>{47}) || (e.ells == std::vector<i64>{2, 3}) ||
                  (e.star && e.field_disc == 28) || (e.ells == std::vector<i64>{7} && e.field_disc == 61);
      if (hard) hard_ok = false;
    }
  }
  for (size_t i = 0; i < report.rows.size(); ++i) {
    if (!used[i]) {
      report.flags.push_back("unmatched computed class " + report.rows[i].label() +
                             " (m=" + std::to_string(report.rows[i].m) + ")");
    }
  }
  report.hard_rows_ok = hard_ok;
  return report;
}

}  // namespace hvn
