#pragma once

#include <cstdint>
#include <vector>

namespace rsing {

/// Puiseux characteristic data (b0; b1, ..., bg) of one branch.
/// A smooth branch is encoded as {1}.
struct BranchType {
  std::vector<int> char_exponents;

  int multiplicity() const { return char_exponents.empty() ? 0 : char_exponents.front(); }
  bool smooth() const { return char_exponents.size() == 1 && char_exponents[0] == 1; }

  friend bool operator==(const BranchType&, const BranchType&) = default;
};

/// Throws ValidationError when the exponent chain is not a valid characteristic sequence.
void validate(const BranchType& b);

/// Topological type of a real singularity. Branch slots are ordered as
/// real branches first, then for each conjugate pair the Q slot followed by the conj(Q) slot.
class SingularityType {
 public:
  /// `intersections` is a full slot x slot table; the diagonal is ignored.
  SingularityType(std::vector<BranchType> real_branches, std::vector<BranchType> conj_pairs,
                  std::vector<std::vector<int>> intersections);

  const std::vector<BranchType>& real_branches() const { return real_; }
  const std::vector<BranchType>& conj_pairs() const { return pairs_; }
  const std::vector<std::vector<int>>& intersections() const { return table_; }

  int re_br() const { return static_cast<int>(real_.size()); }
  int im_br() const { return static_cast<int>(pairs_.size()); }
  int slot_count() const { return re_br() + 2 * im_br(); }
  int real_slot(int r) const { return r; }
  int pair_slot(int k, bool conjugate) const { return re_br() + 2 * k + (conjugate ? 1 : 0); }
  const BranchType& slot_branch(int slot) const;
  int intersection(int slot_a, int slot_b) const { return table_[slot_a][slot_b]; }

 private:
  std::vector<BranchType> real_;
  std::vector<BranchType> pairs_;
  std::vector<std::vector<int>> table_;
};

std::vector<int> multiplicity_sequence(const BranchType& b);
std::int64_t branch_delta(const BranchType& b);

std::int64_t multiplicity(const SingularityType& s);
std::int64_t delta_total(const SingularityType& s);
std::int64_t milnor_number(const SingularityType& s);
std::int64_t expected_node_count(const SingularityType& s);
std::int64_t expected_inner_regions(const SingularityType& s);

}  // namespace rsing
