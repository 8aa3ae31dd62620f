#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rsing/sing_model.hpp"

namespace rsing {

/// Topological type of a pair of complex conjugate branches with Puiseux expansions
///   y = x^{m1/n1} + ... + x^{m_i/(n1..n_i)} +- sqrt(-1) (x^{m_{i+1}/(n1..n_{i+1})} + ... + x^{m_s/(n1..n_s)}).
/// Indices in `m` and `n` are 0-based: m[0] is m_1.
struct ConjPairType {
  int s = 1;
  int i = 0;
  std::vector<int> m;
  std::vector<int> n;

  friend bool operator==(const ConjPairType&, const ConjPairType&) = default;
  friend auto operator<=>(const ConjPairType&, const ConjPairType&) = default;
};

/// Checks the normal-form constraints on (s, i, m, n): coprimality, n_j > 1 off the
/// imaginary leading slot, and strictly increasing exponents starting at >= 1.
void validate_constraints(const ConjPairType& t);

/// validate_constraints plus the requirement that the two expansions are distinct branches
/// (n_{i+1} odd; an even n_{i+1} makes the two signs Galois-conjugate parametrizations of one branch).
void validate(const ConjPairType& t);

/// Exact quantities entering the Alexander polynomial formula. Vectors are indexed by the
/// 1-based slot j (entry 0 unused).
struct DerivedQuantities {
  std::int64_t n = 1;
  std::vector<std::int64_t> w;
  std::vector<std::int64_t> e;  // defined for i+2 <= j <= s, zero elsewhere
  std::vector<int> nj;          // copy of n_j, 1-based

  /// prod_{j1 <= j <= j2} n_j, empty product 1.
  std::int64_t b(int j1, int j2) const;
};

DerivedQuantities derived_quantities(const ConjPairType& t);

/// prod_N (t^N - 1)^{k_N}; zero exponents are never stored.
struct FactorForm {
  std::map<std::int64_t, std::int64_t> factors;
  void add(std::int64_t N, std::int64_t k);
  friend bool operator==(const FactorForm&, const FactorForm&) = default;
};

/// prod_d Phi_d(t)^{k_d}; zero exponents are never stored.
struct CycloVector {
  std::map<std::int64_t, std::int64_t> exps;
  void add(std::int64_t d, std::int64_t k);
  friend bool operator==(const CycloVector&, const CycloVector&) = default;
};

FactorForm alexander_encode(const ConjPairType& t);
CycloVector to_cyclotomic(const FactorForm& f);
std::int64_t degree(const CycloVector& v);
std::int64_t euler_phi(std::int64_t d);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Coefficients lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t d);
std::vector<std::int64_t> expand(const CycloVector& v, std::int64_t degree_cap = 512);

struct PeelStep {
  std::int64_t d = 0;
  std::int64_t eps = 0;
  friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

struct PeelResult {
  std::vector<PeelStep> steps;
  int r = 0;  // number of steps
  int l = 0;  // length of the leading run of even exponents
};

/// Repeatedly strips (t^d - 1)^eps with d the largest cyclotomic index present.
PeelResult peel_sequence(const CycloVector& v);

class NotInImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UniquenessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchBounds {
  int max_s = 3;
  int max_n = 5;
  int max_m = 40;
  friend auto operator<=>(const SearchBounds&, const SearchBounds&) = default;
};

struct DecodeResult {
  enum class Kind { Node, Pair };
  Kind kind = Kind::Pair;
  /// For Kind::Node this is the elliptic node (s=1, i=0, m=[1], n=[1]).
  ConjPairType type;
  bool via_search = false;
};

/// Recovers the conjugate-pair type from the cyclotomic exponent vector of its reduced
/// Alexander polynomial. The peel read-off is tried first; if it does not reproduce `v`
/// on re-encoding, all valid types inside `bounds` are searched.
DecodeResult alexander_decode(const CycloVector& v, const SearchBounds& bounds = {});

/// All types passing validate() with s, n_j, m_j inside the bounds, in lexicographic order.
std::vector<ConjPairType> enumerate_conj_pair_types(const SearchBounds& bounds);

/// Characteristic data of either branch of the pair.
BranchType branch_type(const ConjPairType& t);
/// Intersection multiplicity of the two conjugate branches.
std::int64_t conjugate_intersection(const ConjPairType& t);
/// The pair as a SingularityType with ImBr = 1.
SingularityType as_singularity(const ConjPairType& t);

}  // namespace rsing
