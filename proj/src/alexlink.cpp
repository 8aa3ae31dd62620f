#include "rsing/alexlink.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>

#include "rsing/errors.hpp"

namespace rsing {

namespace {

std::string describe(const ConjPairType& t) {
  std::string out = "(s=" + std::to_string(t.s) + ", i=" + std::to_string(t.i) + ", m=[";
  for (std::size_t k = 0; k < t.m.size(); ++k) out += (k ? "," : "") + std::to_string(t.m[k]);
  out += "], n=[";
  for (std::size_t k = 0; k < t.n.size(); ++k) out += (k ? "," : "") + std::to_string(t.n[k]);
  return out + "])";
}

std::string key_of(const CycloVector& v) {
  std::string key;
  for (auto [d, k] : v.exps) key += std::to_string(d) + ":" + std::to_string(k) + ";";
  return key;
}

}  // namespace

void validate_constraints(const ConjPairType& t) {
  if (t.s < 1) throw ValidationError("conj pair: s must be >= 1");
  if (t.i < 0 || t.i >= t.s) throw ValidationError("conj pair: need 0 <= i < s");
  if (static_cast<int>(t.m.size()) != t.s || static_cast<int>(t.n.size()) != t.s)
    throw ValidationError("conj pair: m and n must have s entries");
  for (int j = 0; j < t.s; ++j) {
    if (t.m[j] < 1 || t.n[j] < 1) throw ValidationError("conj pair: m_j and n_j must be positive");
    if (std::gcd(t.m[j], t.n[j]) != 1)
      throw ValidationError("conj pair: gcd(m_" + std::to_string(j + 1) + ", n_" + std::to_string(j + 1) + ") != 1");
    if (j != t.i && t.n[j] <= 1)
      throw ValidationError("conj pair: n_" + std::to_string(j + 1) + " must exceed 1");
  }
  if (t.m[0] < t.n[0]) throw ValidationError("conj pair: leading exponent m_1/n_1 must be >= 1");
  // m_{j-1}/P_{j-1} < m_j/P_j with P_j = P_{j-1} n_j
  for (int j = 1; j < t.s; ++j)
    if (std::int64_t{t.m[j - 1]} * t.n[j] >= t.m[j])
      throw ValidationError("conj pair: exponents must be strictly increasing");
}

void validate(const ConjPairType& t) {
  validate_constraints(t);
  if (t.n[t.i] % 2 == 0)
    throw ValidationError("conj pair: n_" + std::to_string(t.i + 1) +
                          " is even, so both signs parametrize the same branch " + describe(t));
}

std::int64_t DerivedQuantities::b(int j1, int j2) const {
  std::int64_t p = 1;
  for (int j = j1; j <= j2; ++j) p *= nj[j];
  return p;
}

DerivedQuantities derived_quantities(const ConjPairType& t) {
  validate_constraints(t);
  DerivedQuantities q;
  const int s = t.s;
  q.nj.assign(s + 2, 1);
  for (int j = 1; j <= s; ++j) q.nj[j] = t.n[j - 1];
  q.n = q.b(1, s);
  q.w.assign(s + 1, 0);
  q.w[1] = t.m[0];
  for (int j = 2; j <= s; ++j)
    q.w[j] = t.m[j - 1] - std::int64_t{t.m[j - 2]} * q.nj[j] + q.w[j - 1] * q.nj[j - 1] * q.nj[j];
  q.e.assign(s + 1, 0);
  const int i = t.i;
  for (int j = i + 2; j <= s; ++j)
    q.e[j] = q.w[i + 1] * q.b(i + 1, s) * q.b(i + 2, j - 1) + q.w[j] * q.b(j + 1, s);
  return q;
}

void FactorForm::add(std::int64_t N, std::int64_t k) {
  if (k == 0) return;
  auto& slot = factors[N];
  slot += k;
  if (slot == 0) factors.erase(N);
}

void CycloVector::add(std::int64_t d, std::int64_t k) {
  if (k == 0) return;
  auto& slot = exps[d];
  slot += k;
  if (slot == 0) exps.erase(d);
}

FactorForm alexander_encode(const ConjPairType& t) {
  const auto q = derived_quantities(t);
  const int s = t.s, i = t.i;
  FactorForm f;
  f.add(1, 1);
  f.add(2 * q.n, -1);
  for (int j = 1; j <= i; ++j) {
    f.add(2 * q.w[j] * q.b(j, s), 1);
    f.add(2 * q.w[j] * q.b(j + 1, s), -1);
  }
  f.add(2 * q.w[i + 1] * q.b(i + 1, s), 2);
  f.add(2 * q.w[i + 1] * q.b(i + 2, s), -1);
  for (int j = i + 2; j <= s; ++j) {
    f.add(q.nj[j] * q.e[j], 2);
    f.add(q.e[j], -2);
  }
  return f;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

CycloVector to_cyclotomic(const FactorForm& f) {
  CycloVector v;
  for (auto [N, k] : f.factors)
    for (auto d : divisors(N)) v.add(d, k);
  return v;
}

std::int64_t euler_phi(std::int64_t d) {
  std::int64_t result = d;
  for (std::int64_t p = 2; p * p <= d; ++p)
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      result -= result / p;
    }
  if (d > 1) result -= result / d;
  return result;
}

std::int64_t degree(const CycloVector& v) {
  std::int64_t deg = 0;
  for (auto [d, k] : v.exps) deg += k * euler_phi(d);
  return deg;
}

namespace {

using Coeffs = std::vector<std::int64_t>;

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0, sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &sum))
    throw NumericError("expand: integer coefficient overflow");
  return sum;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_mul_add(out[i + j], a[i], b[j]);
  return out;
}

/// Exact division by a monic divisor.
Coeffs divide_exact(Coeffs num, const Coeffs& den) {
  const std::size_t dn = den.size() - 1;
  Coeffs quot(num.size() - dn, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::int64_t c = num[k + dn];
    quot[k] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dn; ++j) num[k + j] = checked_mul_add(num[k + j], -c, den[j]);
  }
  return quot;
}

}  // namespace

Coeffs cyclotomic_polynomial(std::int64_t d) {
  if (d < 1) throw ValidationError("cyclotomic index must be positive");
  Coeffs num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  for (auto e : divisors(d))
    if (e != d) num = divide_exact(num, cyclotomic_polynomial(e));
  return num;
}

Coeffs expand(const CycloVector& v, std::int64_t degree_cap) {
  for (auto [d, k] : v.exps)
    if (k < 0) throw ValidationError("expand: negative exponent at Phi_" + std::to_string(d) + " (not a polynomial)");
  if (degree(v) > degree_cap)
    throw ValidationError("expand: degree " + std::to_string(degree(v)) + " exceeds cap " + std::to_string(degree_cap));
  Coeffs out{1};
  for (auto [d, k] : v.exps) {
    const Coeffs phi = cyclotomic_polynomial(d);
    for (std::int64_t r = 0; r < k; ++r) out = multiply(out, phi);
  }
  return out;
}

PeelResult peel_sequence(const CycloVector& v) {
  for (auto [d, k] : v.exps)
    if (k < 0) throw ValidationError("peel: negative exponent at Phi_" + std::to_string(d) + " (not a polynomial)");
  PeelResult out;
  CycloVector f = v;
  // the largest index strictly decreases, so this terminates
  while (!f.exps.empty()) {
    auto top = std::prev(f.exps.end());
    const PeelStep step{top->first, top->second};
    out.steps.push_back(step);
    for (auto d : divisors(step.d)) f.add(d, -step.eps);
  }
  out.r = static_cast<int>(out.steps.size());
  while (out.l < out.r && out.steps[out.l].eps % 2 == 0) ++out.l;
  return out;
}

namespace {

std::optional<ConjPairType> read_off(const PeelResult& pr) {
  const auto& st = pr.steps;
  const int s = (pr.r - 1) / 2;
  if (s < 1) return std::nullopt;
  const int i = s - pr.l / 2 - 1;
  if (i < 0 || i >= s) return std::nullopt;
  const bool merged = pr.l % 2 == 0;  // n_{i+1} = 1
  if (pr.r != 2 * s + 2 - (merged ? 1 : 0)) return std::nullopt;

  std::vector<std::int64_t> nj(s + 2, 1), e(s + 1, 0), w(s + 1, 0);
  auto b = [&](int j1, int j2) {
    std::int64_t p = 1;
    for (int j = j1; j <= j2; ++j) p *= nj[j];
    return p;
  };
  std::size_t idx = 0;
  for (int j = s; j >= i + 2; --j) {
    if (st[idx].eps != 2 || st[idx + 1].eps != -2 || st[idx].d % st[idx + 1].d != 0) return std::nullopt;
    nj[j] = st[idx].d / st[idx + 1].d;
    e[j] = st[idx + 1].d;
    idx += 2;
  }
  const std::int64_t A = st[idx].d;
  if (st[idx].eps != (merged ? 1 : 2)) return std::nullopt;
  ++idx;
  if (!merged) {
    if (st[idx].eps != -1 || A % st[idx].d != 0) return std::nullopt;
    nj[i + 1] = A / st[idx].d;
    ++idx;
  }
  const std::int64_t lead = 2 * b(i + 1, s);
  if (A % lead != 0) return std::nullopt;
  w[i + 1] = A / lead;
  for (int j = i; j >= 1; --j) {
    const auto P = st[idx].d, R = st[idx + 1].d;
    if (st[idx].eps != 1 || st[idx + 1].eps != -1 || P % R != 0) return std::nullopt;
    nj[j] = P / R;
    const std::int64_t den = 2 * b(j + 1, s);
    if (R % den != 0) return std::nullopt;
    w[j] = R / den;
    idx += 2;
  }
  for (int j = i + 2; j <= s; ++j) {
    const std::int64_t num = e[j] - w[i + 1] * b(i + 1, s) * b(i + 2, j - 1);
    const std::int64_t den = b(j + 1, s);
    if (num % den != 0) return std::nullopt;
    w[j] = num / den;
  }
  ConjPairType t;
  t.s = s;
  t.i = i;
  t.m.assign(s, 0);
  t.n.assign(s, 1);
  std::int64_t m_prev = 0;
  for (int j = 1; j <= s; ++j) {
    const std::int64_t mj = (j == 1) ? w[1] : w[j] + m_prev * nj[j] - w[j - 1] * nj[j - 1] * nj[j];
    if (mj < 1 || mj > (1 << 30) || nj[j] > (1 << 30)) return std::nullopt;
    t.m[j - 1] = static_cast<int>(mj);
    t.n[j - 1] = static_cast<int>(nj[j]);
    m_prev = mj;
  }
  try {
    validate(t);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
  return t;
}

using PreimageIndex = std::unordered_map<std::string, std::vector<ConjPairType>>;

const PreimageIndex& preimage_index(const SearchBounds& bounds) {
  static std::mutex mutex;
  static std::map<SearchBounds, PreimageIndex> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(bounds);
  if (it != cache.end()) return it->second;
  PreimageIndex index;
  for (const auto& t : enumerate_conj_pair_types(bounds))
    index[key_of(to_cyclotomic(alexander_encode(t)))].push_back(t);
  return cache.emplace(bounds, std::move(index)).first->second;
}

void enumerate_rec(const SearchBounds& bounds, ConjPairType& t, int j, std::vector<ConjPairType>& out) {
  if (j == t.s) {
    try {
      validate(t);
      out.push_back(t);
    } catch (const ValidationError&) {
    }
    return;
  }
  for (int nj = 1; nj <= bounds.max_n; ++nj) {
    if (j != t.i && nj == 1) continue;
    if (j == t.i && nj % 2 == 0) continue;
    for (int mj = 1; mj <= bounds.max_m; ++mj) {
      if (std::gcd(mj, nj) != 1) continue;
      if (j == 0 && mj < nj) continue;
      if (j > 0 && std::int64_t{t.m[j - 1]} * nj >= mj) continue;
      t.m[j] = mj;
      t.n[j] = nj;
      enumerate_rec(bounds, t, j + 1, out);
    }
  }
}

}  // namespace

std::vector<ConjPairType> enumerate_conj_pair_types(const SearchBounds& bounds) {
  std::vector<ConjPairType> out;
  for (int s = 1; s <= bounds.max_s; ++s)
    for (int i = 0; i < s; ++i) {
      ConjPairType t{s, i, std::vector<int>(s, 0), std::vector<int>(s, 0)};
      enumerate_rec(bounds, t, 0, out);
    }
  std::sort(out.begin(), out.end());
  return out;
}

DecodeResult alexander_decode(const CycloVector& v, const SearchBounds& bounds) {
  for (auto [d, k] : v.exps)
    if (k < 0) throw NotInImageError("decode: negative cyclotomic exponent, not a polynomial");
  const std::int64_t deg = degree(v);
  if (deg == 1 && v.exps.size() == 1 && v.exps.count(1)) {
    return {DecodeResult::Kind::Node, ConjPairType{1, 0, {1}, {1}}, false};
  }
  if (deg < 1 || deg % 2 == 0)
    throw NotInImageError("decode: degree " + std::to_string(deg) +
                          " is not the (odd) Milnor number of a conjugate pair");

  const auto direct = read_off(peel_sequence(v));
  if (direct && to_cyclotomic(alexander_encode(*direct)) == v)
    return {DecodeResult::Kind::Pair, *direct, false};

  const auto& index = preimage_index(bounds);
  auto it = index.find(key_of(v));
  if (it == index.end()) throw NotInImageError("decode: no conjugate-pair type within the search bounds encodes to this vector");
  if (it->second.size() > 1)
    throw UniquenessError("decode: " + describe(it->second[0]) + " and " + describe(it->second[1]) +
                          " encode to the same polynomial");
  const auto& t = it->second.front();
  if (t == ConjPairType{1, 0, {1}, {1}}) return {DecodeResult::Kind::Node, t, true};
  return {DecodeResult::Kind::Pair, t, true};
}

BranchType branch_type(const ConjPairType& t) {
  validate(t);
  const auto q = derived_quantities(t);
  BranchType b;
  b.char_exponents.push_back(static_cast<int>(q.n));
  for (int j = 1; j <= t.s; ++j)
    if (q.nj[j] > 1) b.char_exponents.push_back(static_cast<int>(t.m[j - 1] * q.b(j + 1, t.s)));
  return b;
}

std::int64_t conjugate_intersection(const ConjPairType& t) {
  validate(t);
  const auto q = derived_quantities(t);
  const std::int64_t n = q.n;
  // Puiseux conjugates x^{1/n} -> zeta^k x^{1/n}; the term with s-exponent E picks up zeta^{kE}.
  // Q has coefficients (1,..,1, i,..,i), conj(Q) has (1,..,1, -i,..,-i).
  std::int64_t total = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    std::int64_t contact = -1;
    for (int j = 1; j <= t.s && contact < 0; ++j) {
      const std::int64_t E = t.m[j - 1] * q.b(j + 1, t.s);
      const std::int64_t twice = (2 * k * E) % (2 * n);  // 2kE/n mod 2 measured in units of 1/n
      const bool same = (j <= t.i) ? twice == 0 : twice == n;
      if (!same) contact = E;
    }
    if (contact < 0) throw ValidationError("conj pair: the two expansions define the same branch");
    total += contact;
  }
  return total;
}

SingularityType as_singularity(const ConjPairType& t) {
  const auto qq = static_cast<int>(conjugate_intersection(t));
  return SingularityType({}, {branch_type(t)}, {{0, qq}, {qq, 0}});
}

}  // namespace rsing
