#include "hvn/cmsearch.hpp"

namespace hvn {

namespace {

// c_n for n = 0..terms-1 with j(q) = 1/q + sum_{n>=0} c_n q^n
// (c_0 = 744, c_1 = 196884, ...). Computed as E4^3 / (Delta/q) = q*j.
std::vector<Int> compute_j_coeffs(size_t terms) {
  size_t N = terms + 2;
  // E4 = 1 + 240 sum sigma_3(n) q^n
  std::vector<Int> e4(N, 0);
  e4[0] = 1;
  for (size_t n = 1; n < N; ++n) {
    Int s = 0;
    for (size_t d = 1; d <= n; ++d)
      if (n % d == 0) s += Int(static_cast<unsigned long>(d * d)) * static_cast<unsigned long>(d);
    e4[n] = 240 * s;
  }
  auto mul = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(N, 0);
    for (size_t i = 0; i < N; ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; i + j < N; ++j) {
        if (b[j] == 0) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  };
  std::vector<Int> e4cubed = mul(mul(e4, e4), e4);
  // Delta/q = prod (1 - q^n)^24
  std::vector<Int> dq(N, 0);
  dq[0] = 1;
  for (size_t n = 1; n < N; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (size_t i = N; i-- > n;) dq[i] -= dq[i - n];
    }
  }
  // inverse power series of dq
  std::vector<Int> inv(N, 0);
  inv[0] = 1;
  for (size_t n = 1; n < N; ++n) {
    Int s = 0;
    for (size_t k = 1; k <= n; ++k) s += dq[k] * inv[n - k];
    inv[n] = -s;
  }
  std::vector<Int> shifted = mul(e4cubed, inv);  // = q * j(q)
  HVN_CHECK(shifted[0] == 1);
  return std::vector<Int>(shifted.begin() + 1, shifted.begin() + 1 + terms);
}

}  // namespace

std::vector<Int> j_series_coefficients(size_t terms) {
  static std::vector<Int> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() < terms) cache = compute_j_coeffs(terms);
  return std::vector<Int>(cache.begin(), cache.begin() + terms);
}

}  // namespace hvn
