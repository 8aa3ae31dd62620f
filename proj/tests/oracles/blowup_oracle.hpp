#pragma once
// Literal point-blow-up oracle for delta invariants, independent of the Euclidean
// multiplicity-sequence route in the library.
//
// Branches are given by parametrizations x = X(s), y = Y(s) as truncated power series
// with coefficients in GF(p), p = 998244353 (p = 1 mod 4, so sqrt(-1) exists and
// conjugate Puiseux coefficients +-i can be represented exactly). Each blow-up replaces
// the chart coordinates by (x, y/x - c) or (x/y - c, y); delta accumulates
// mt(mt-1)/2 at every infinitely near point, summed over all branches through it.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

constexpr std::uint64_t kPrime = 998244353;

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}
inline std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }
inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return (a + kPrime - b) % kPrime; }
/// A square root of -1 in GF(p); 3 is a primitive root.
inline std::uint64_t imag_unit() { return mod_pow(3, (kPrime - 1) / 4); }

constexpr int kInfinite = 1 << 29;

/// Truncated series; coefficients with index >= valid are unknown.
struct Series {
  std::vector<std::uint64_t> c;
  int valid = 0;

  int ord() const {
    for (int k = 0; k < valid && k < static_cast<int>(c.size()); ++k)
      if (c[k] != 0) return k;
    return kInfinite;
  }
};

class PrecisionExhausted : public std::runtime_error {
 public:
  PrecisionExhausted() : std::runtime_error("blow-up oracle ran out of series precision") {}
};

/// a / b where ord(b) <= ord(a).
inline Series divide(const Series& a, const Series& b) {
  const int k = b.ord();
  if (k >= b.valid) throw PrecisionExhausted();
  const int valid = std::min(a.valid, b.valid) - k;
  if (valid <= 0) throw PrecisionExhausted();
  Series q;
  q.valid = valid;
  q.c.assign(valid, 0);
  const std::uint64_t lead_inv = mod_inv(b.c[k]);
  // a = b * q  =>  a[n+k] = sum_j b[j+k] q[n-j]
  for (int n = 0; n < valid; ++n) {
    std::uint64_t acc = (n + k < static_cast<int>(a.c.size())) ? a.c[n + k] : 0;
    for (int j = 1; j <= n; ++j) {
      const int bi = j + k;
      if (bi < static_cast<int>(b.c.size()) && b.c[bi] != 0 && q.c[n - j] != 0)
        acc = mod_sub(acc, b.c[bi] * q.c[n - j] % kPrime);
    }
    q.c[n] = acc * lead_inv % kPrime;
  }
  return q;
}

struct BranchParam {
  Series x, y;
};

inline int branch_mult(const BranchParam& b) {
  const int m = std::min(b.x.ord(), b.y.ord());
  if (m >= kInfinite || m == 0) throw PrecisionExhausted();
  return m;
}

/// Chart key identifies the infinitely near point on the new exceptional divisor.
struct Blown {
  BranchParam param;
  int chart = 0;
  std::uint64_t c = 0;
};

inline Blown blow_up(const BranchParam& b) {
  Blown out;
  if (b.x.ord() <= b.y.ord()) {
    Series y1 = divide(b.y, b.x);
    out.chart = 0;
    out.c = y1.c.empty() ? 0 : y1.c[0];
    if (!y1.c.empty()) y1.c[0] = 0;
    out.param = {b.x, y1};
  } else {
    Series x1 = divide(b.x, b.y);
    out.chart = 1;
    out.c = x1.c.empty() ? 0 : x1.c[0];
    if (!x1.c.empty()) x1.c[0] = 0;
    out.param = {x1, b.y};
  }
  return out;
}

/// Sum of mt(mt-1)/2 over all infinitely near points of the union of the branches,
/// all of which pass through the origin of the current chart.
inline std::int64_t delta_of_union(const std::vector<BranchParam>& branches) {
  std::int64_t mt = 0;
  for (const auto& b : branches) mt += branch_mult(b);
  std::int64_t delta = mt * (mt - 1) / 2;
  if (branches.size() == 1 && mt == 1) return delta;
  std::vector<Blown> blown;
  blown.reserve(branches.size());
  for (const auto& b : branches) blown.push_back(blow_up(b));
  std::vector<bool> used(blown.size(), false);
  for (std::size_t i = 0; i < blown.size(); ++i) {
    if (used[i]) continue;
    std::vector<BranchParam> group{blown[i].param};
    used[i] = true;
    for (std::size_t j = i + 1; j < blown.size(); ++j)
      if (!used[j] && blown[j].chart == blown[i].chart && blown[j].c == blown[i].c) {
        group.push_back(blown[j].param);
        used[j] = true;
      }
    delta += delta_of_union(group);
  }
  return delta;
}

/// Multiplicities at the blown-up points of a single branch until its strict transform is
/// smooth and meets the exceptional locus transversally at a point of exactly one component.
inline std::vector<int> multiplicities_by_blowup(BranchParam b) {
  std::vector<int> seq;
  bool x_axis_exc = false;  // {x = 0} is exceptional
  bool y_axis_exc = false;  // {y = 0} is exceptional
  for (int guard = 0; guard < 10000; ++guard) {
    seq.push_back(branch_mult(b));
    Blown nb = blow_up(b);
    if (nb.chart == 0) {
      y_axis_exc = y_axis_exc && nb.c == 0;
      x_axis_exc = true;
    } else {
      x_axis_exc = x_axis_exc && nb.c == 0;
      y_axis_exc = true;
    }
    b = nb.param;
    const int ox = b.x.ord(), oy = b.y.ord();
    if (x_axis_exc && !y_axis_exc && ox == 1) return seq;
    if (y_axis_exc && !x_axis_exc && oy == 1) return seq;
  }
  throw std::runtime_error("blow-up oracle did not terminate");
}

inline Series monomial_sum(const std::vector<std::pair<int, std::uint64_t>>& terms, int precision) {
  Series s;
  s.valid = precision;
  s.c.assign(precision, 0);
  for (auto [e, coef] : terms)
    if (e < precision) s.c[e] = (s.c[e] + coef) % kPrime;
  return s;
}

/// Parametrization x = s^b0, y = sum_k s^{b_k} of a branch with characteristic data b.
inline BranchParam branch_from_char_exponents(const std::vector<int>& beta, int precision) {
  std::vector<std::pair<int, std::uint64_t>> ys;
  for (std::size_t k = 1; k < beta.size(); ++k) ys.push_back({beta[k], 1});
  if (beta.size() == 1) ys.push_back({2, 1});  // smooth: y = s^2 is transversal to nothing special
  return {monomial_sum({{beta[0], 1}}, precision), monomial_sum(ys, precision)};
}

}  // namespace oracle
