#pragma once
// Milnor number of a conjugate branch pair computed from its Puiseux expansions by
// literal blow-up, and a direct product/quotient evaluation of the Alexander formula.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "oracles/blowup_oracle.hpp"

namespace oracle {

/// x = s^n, y = sum_{j<=i} s^{E_j} +- sqrt(-1) sum_{j>i} s^{E_j}, E_j = m_j n_{j+1}...n_s.
inline std::int64_t pair_milnor(int i, const std::vector<int>& m, const std::vector<int>& n) {
  const int s = static_cast<int>(m.size());
  int total_n = 1;
  for (int v : n) total_n *= v;
  std::vector<int> E(s);
  for (int j = 0; j < s; ++j) {
    int tail = 1;
    for (int k = j + 1; k < s; ++k) tail *= n[k];
    E[j] = m[j] * tail;
  }
  const std::uint64_t I = imag_unit();
  for (int precision = 2 * (E.back() + total_n) + 8;; precision *= 2) {
    std::vector<std::pair<int, std::uint64_t>> plus, minus;
    for (int j = 0; j < s; ++j) {
      plus.push_back({E[j], j < i ? 1 : I});
      minus.push_back({E[j], j < i ? 1 : kPrime - I});
    }
    const Series x = monomial_sum({{total_n, 1}}, precision);
    try {
      const auto delta = delta_of_union({{x, monomial_sum(plus, precision)}, {x, monomial_sum(minus, precision)}});
      // mu = 2 delta - r + 1 with r = 2 branches
      return 2 * delta - 1;
    } catch (const PrecisionExhausted&) {
      if (precision > 4096) throw;
    }
  }
}

using IntPoly = std::vector<std::int64_t>;

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Divides by t^N - 1 and insists on a zero remainder.
inline IntPoly poly_div_binomial(IntPoly a, std::int64_t N) {
  if (static_cast<std::int64_t>(a.size()) <= N) throw std::runtime_error("not divisible");
  IntPoly q(a.size() - N, 0);
  for (std::size_t k = a.size(); k-- > static_cast<std::size_t>(N);) {
    const auto c = a[k];
    q[k - N] = c;
    a[k] -= c;
    a[k - N] += c;
  }
  for (std::int64_t k = 0; k < N; ++k)
    if (a[k] != 0) throw std::runtime_error("not divisible");
  return q;
}

/// prod_N (t^N - 1)^{k_N} evaluated by multiplying out the numerator and dividing.
inline IntPoly factor_product(const std::map<std::int64_t, std::int64_t>& factors) {
  IntPoly p{1};
  for (auto [N, k] : factors)
    for (std::int64_t r = 0; r < k; ++r) {
      IntPoly f(N + 1, 0);
      f[0] = -1;
      f[N] = 1;
      p = poly_mul(p, f);
    }
  for (auto [N, k] : factors)
    for (std::int64_t r = 0; r < -k; ++r) p = poly_div_binomial(p, N);
  return p;
}

}  // namespace oracle
