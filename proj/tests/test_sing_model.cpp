#include <doctest.h>

#include <numeric>

#include "oracles/blowup_oracle.hpp"
#include "rsing/errors.hpp"
#include "rsing/sing_model.hpp"

using namespace rsing;

namespace {

SingularityType node() { return {{{{1}}, {{1}}}, {}, {{0, 1}, {1, 0}}}; }

SingularityType conj_cusp_pair() { return {{}, {{{2, 3}}}, {{0, 4}, {4, 0}}}; }

std::vector<int> oracle_sequence(const BranchType& b) {
  const int precision = 4 * (b.char_exponents.back() + b.char_exponents.front()) + 8;
  return oracle::multiplicities_by_blowup(oracle::branch_from_char_exponents(b.char_exponents, precision));
}

}  // namespace

TEST_CASE("multiplicity sequence of small branches") {
  CHECK(multiplicity_sequence({{1}}) == std::vector<int>{1});
  CHECK(multiplicity_sequence({{2, 3}}) == std::vector<int>{2, 1, 1});
  // Frozen from the blow-up oracle of x = s^4, y = s^6 + s^7.
  CHECK(multiplicity_sequence({{4, 6, 7}}) == std::vector<int>{4, 2, 2, 1, 1});
  CHECK(oracle_sequence({{4, 6, 7}}) == std::vector<int>{4, 2, 2, 1, 1});
}

TEST_CASE("branch delta") {
  CHECK(branch_delta({{1}}) == 0);
  CHECK(branch_delta({{2, 3}}) == 1);
  CHECK(branch_delta({{4, 6, 7}}) == 8);
}

TEST_CASE("branch validation") {
  CHECK_THROWS_AS(validate(BranchType{{}}), ValidationError);
  CHECK_THROWS_AS(validate(BranchType{{1, 3}}), ValidationError);
  CHECK_THROWS_AS(validate(BranchType{{2}}), ValidationError);
  CHECK_THROWS_AS(validate(BranchType{{2, 4}}), ValidationError);
  CHECK_THROWS_AS(validate(BranchType{{4, 6, 8}}), ValidationError);
  CHECK_THROWS_AS(validate(BranchType{{4, 6}}), ValidationError);
  CHECK_THROWS_AS(validate(BranchType{{3, 2}}), ValidationError);
  CHECK_NOTHROW(validate(BranchType{{6, 9, 10}}));
}

TEST_CASE("sequence agrees with blow-up oracle on all small branches") {
  // every valid chain with b0 <= 6, at most 3 characteristic exponents, exponents < 20
  int checked = 0;
  std::vector<BranchType> all;
  for (int b0 = 2; b0 <= 6; ++b0)
    for (int b1 = b0 + 1; b1 < 20; ++b1) {
      all.push_back({{b0, b1}});
      for (int b2 = b1 + 1; b2 < 20; ++b2) {
        all.push_back({{b0, b1, b2}});
        for (int b3 = b2 + 1; b3 < 20; ++b3) all.push_back({{b0, b1, b2, b3}});
      }
    }
  for (const auto& b : all) {
    try {
      validate(b);
    } catch (const ValidationError&) {
      continue;
    }
    const auto seq = multiplicity_sequence(b);
    REQUIRE(seq.front() == b.multiplicity());
    CHECK(std::is_sorted(seq.rbegin(), seq.rend()));
    CHECK(seq.back() == 1);
    CHECK(seq == oracle_sequence(b));
    const auto oracle_param =
        oracle::branch_from_char_exponents(b.char_exponents, 4 * (b.char_exponents.back() + b.char_exponents[0]) + 8);
    CHECK(branch_delta(b) == oracle::delta_of_union({oracle_param}));
    ++checked;
  }
  CHECK(checked >= 80);
}

TEST_CASE("invariants of basic types") {
  SingularityType smooth{{{{1}}}, {}, {{0}}};
  CHECK(delta_total(smooth) == 0);
  CHECK(milnor_number(smooth) == 0);

  CHECK(delta_total(node()) == 1);
  CHECK(milnor_number(node()) == 1);
  CHECK(expected_node_count(node()) == 1);
  CHECK(expected_inner_regions(node()) == 0);

  const auto cusp_pair = conj_cusp_pair();
  CHECK(delta_total(cusp_pair) == 6);
  CHECK(milnor_number(cusp_pair) == 11);
  CHECK(expected_node_count(cusp_pair) == 5);
  CHECK(expected_inner_regions(cusp_pair) == 6);

  SingularityType elliptic{{}, {{{1}}}, {{0, 1}, {1, 0}}};
  CHECK(delta_total(elliptic) == 1);
  CHECK(expected_node_count(elliptic) == 0);

  SingularityType cusp{{{{2, 3}}}, {}, {{0}}};
  CHECK(milnor_number(cusp) == 2);
  CHECK(expected_inner_regions(cusp) == 1);
}

TEST_CASE("delta of unions matches the point blow-up oracle") {
  // conjugate cusp pair y = +-i x^{3/2} + ..., tangent lines distinct: (Q.Qbar)=4
  const int prec = 40;
  const auto i = oracle::imag_unit();
  // Q: x = s^2, y = s^2 * i + s^3 ; Qbar: x = s^2, y = -i s^2 + s^3 (distinct tangents y = +-ix)
  oracle::BranchParam q{oracle::monomial_sum({{2, 1}}, prec), oracle::monomial_sum({{2, i}, {3, 1}}, prec)};
  oracle::BranchParam qb{oracle::monomial_sum({{2, 1}}, prec),
                         oracle::monomial_sum({{2, oracle::kPrime - i}, {3, 1}}, prec)};
  CHECK(oracle::delta_of_union({q, qb}) == delta_total(conj_cusp_pair()));
}

TEST_CASE("intersection table validation") {
  CHECK_THROWS_AS(SingularityType({}, {}, {}), ValidationError);
  CHECK_THROWS_AS(SingularityType({{{1}}, {{1}}}, {}, {{0, 1}, {2, 0}}), ValidationError);
  CHECK_THROWS_AS(SingularityType({{{2, 3}}, {{1}}}, {}, {{0, 1}, {1, 0}}), ValidationError);
  // real branch P against pair: (P.Q) must equal (P.Qbar)
  CHECK_THROWS_AS(SingularityType({{{1}}}, {{{1}}}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}), ValidationError);
  CHECK_NOTHROW(SingularityType({{{1}}}, {{{1}}}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  // two pairs: (Q'.Q'') = (Qbar'.Qbar'') and (Q'.Qbar'') = (Qbar'.Q'')
  std::vector<std::vector<int>> t{{0, 1, 2, 1}, {1, 0, 1, 1}, {2, 1, 0, 1}, {1, 1, 1, 0}};
  CHECK_THROWS_AS(SingularityType({}, {{{1}}, {{1}}}, t), ValidationError);
}

TEST_CASE("Milnor number splits into nodes plus inner regions") {
  std::vector<SingularityType> types{node(), conj_cusp_pair(),
                                     SingularityType({{{2, 3}}, {{1}}}, {{{3, 4}}}, {{0, 2, 6, 6},
                                                                                    {2, 0, 3, 3},
                                                                                    {6, 3, 0, 9},
                                                                                    {6, 3, 9, 0}})};
  for (const auto& s : types) CHECK(milnor_number(s) == expected_node_count(s) + expected_inner_regions(s));
}
