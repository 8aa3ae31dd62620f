#include "rsing/sing_model.hpp"

#include <numeric>
#include <string>

#include "rsing/errors.hpp"

namespace rsing {

void validate(const BranchType& b) {
  const auto& beta = b.char_exponents;
  if (beta.empty()) throw ValidationError("branch: empty characteristic exponent list");
  if (beta[0] < 1) throw ValidationError("branch: multiplicity must be positive");
  if (beta[0] == 1) {
    if (beta.size() != 1)
      throw ValidationError("branch: a smooth branch (multiplicity 1) has no characteristic exponents");
    return;
  }
  if (beta.size() == 1)
    throw ValidationError("branch: multiplicity " + std::to_string(beta[0]) +
                          " requires at least one characteristic exponent");
  int e = beta[0];
  for (std::size_t k = 1; k < beta.size(); ++k) {
    if (beta[k] <= beta[k - 1])
      throw ValidationError("branch: characteristic exponents must be strictly increasing");
    if (beta[k] % e == 0)
      throw ValidationError("branch: exponent " + std::to_string(beta[k]) +
                            " is divisible by the running gcd " + std::to_string(e));
    e = std::gcd(e, beta[k]);
  }
  if (e != 1) throw ValidationError("branch: gcd of characteristic exponents must be 1");
}

std::vector<int> multiplicity_sequence(const BranchType& b) {
  validate(b);
  const auto& beta = b.char_exponents;
  if (beta.size() == 1) return {1};
  std::vector<int> seq;
  // Euclid on (b1, b0), then on (b_k - b_{k-1}, e_{k-1}); each quotient q emits the divisor q times.
  int e = beta[0];
  for (std::size_t k = 1; k < beta.size(); ++k) {
    int a = (k == 1) ? beta[1] : beta[k] - beta[k - 1];
    int d = e;
    while (d > 0) {
      seq.insert(seq.end(), a / d, d);
      int r = a % d;
      a = d;
      d = r;
    }
    e = std::gcd(e, beta[k]);
  }
  return seq;
}

std::int64_t branch_delta(const BranchType& b) {
  std::int64_t delta = 0;
  for (int m : multiplicity_sequence(b)) delta += std::int64_t{m} * (m - 1) / 2;
  return delta;
}

SingularityType::SingularityType(std::vector<BranchType> real_branches,
                                 std::vector<BranchType> conj_pairs,
                                 std::vector<std::vector<int>> intersections)
    : real_(std::move(real_branches)), pairs_(std::move(conj_pairs)), table_(std::move(intersections)) {
  if (real_.empty() && pairs_.empty()) throw ValidationError("singularity: no branches");
  for (const auto& b : real_) validate(b);
  for (const auto& b : pairs_) validate(b);
  const int n = slot_count();
  if (static_cast<int>(table_.size()) != n)
    throw ValidationError("singularity: intersection table must have " + std::to_string(n) + " rows");
  for (const auto& row : table_)
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("singularity: intersection table must be square");

  auto where = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  for (int i = 0; i < n; ++i) {
    table_[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (table_[i][j] != table_[j][i])
        throw ValidationError("singularity: intersection table not symmetric at " + where(i, j));
      const std::int64_t lower =
          std::int64_t{slot_branch(i).multiplicity()} * slot_branch(j).multiplicity();
      if (table_[i][j] < lower)
        throw ValidationError("singularity: intersection " + where(i, j) + " below product of multiplicities");
    }
  }
  // Complex conjugation maps slot Q_k <-> conj(Q_k) and fixes real slots.
  auto conj = [this](int slot) {
    if (slot < re_br()) return slot;
    return ((slot - re_br()) % 2 == 0) ? slot + 1 : slot - 1;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && table_[i][j] != table_[conj(i)][conj(j)])
        throw ValidationError("singularity: intersection table violates conjugation symmetry at " + where(i, j));
}

const BranchType& SingularityType::slot_branch(int slot) const {
  if (slot < re_br()) return real_[slot];
  return pairs_[(slot - re_br()) / 2];
}

std::int64_t multiplicity(const SingularityType& s) {
  std::int64_t mt = 0;
  for (int i = 0; i < s.slot_count(); ++i) mt += s.slot_branch(i).multiplicity();
  return mt;
}

std::int64_t delta_total(const SingularityType& s) {
  std::int64_t delta = 0;
  for (int i = 0; i < s.slot_count(); ++i) {
    delta += branch_delta(s.slot_branch(i));
    for (int j = i + 1; j < s.slot_count(); ++j) delta += s.intersection(i, j);
  }
  return delta;
}

std::int64_t milnor_number(const SingularityType& s) {
  return 2 * delta_total(s) - s.re_br() - 2 * s.im_br() + 1;
}

std::int64_t expected_node_count(const SingularityType& s) { return delta_total(s) - s.im_br(); }

std::int64_t expected_inner_regions(const SingularityType& s) {
  return milnor_number(s) - expected_node_count(s);
}

}  // namespace rsing
