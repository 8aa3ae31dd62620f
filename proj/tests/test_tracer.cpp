#include <doctest.h>

#include <cmath>

#include "rsing/ag_diagram.hpp"
#include "rsing/errors.hpp"
#include "rsing/json_io.hpp"
#include "rsing/sing_model.hpp"
#include "rsing/tracer.hpp"

using namespace rsing;

namespace {

int inner_count(const Divide& d) { return static_cast<int>(d.inner_faces().size()); }

TracedDivide trace(const FamilySpec& f) { return trace_with_retries(f, TraceOptions{}); }

}  // namespace

TEST_CASE("one pair (2,3)") {
  const auto f = family_one_puiseux_pair(2, 3, {1.0, 0.0});
  REQUIRE(f.expected_nodes == 5);
  const auto td = trace(f);
  CHECK(td.nodes.size() == 5);
  CHECK(validate(td.divide).empty());
  CHECK(inner_count(td.divide) == 6);
  CHECK(td.divide.branches().size() == 1);
  CHECK(td.divide.boundary().empty());
  for (const auto& n : td.nodes) CHECK(n.residual < 1e-9);
}

TEST_CASE("one pair (3,4) and (2,5)") {
  for (auto [p, q] : {std::pair{3, 4}, std::pair{2, 5}, std::pair{3, 5}}) {
    CAPTURE(p);
    CAPTURE(q);
    const auto f = family_one_puiseux_pair(p, q, {0.7, 0.4});
    const auto td = trace(f);
    CHECK(td.count_ok());
    CHECK(static_cast<int>(td.nodes.size()) == (p - 1) * (p + q));
    CHECK(validate(td.divide).empty());
    const SingularityType type({}, {BranchType{{p, q}}}, {{0, p * p}, {p * p, 0}});
    CHECK(static_cast<int>(td.nodes.size()) == expected_node_count(type));
    CHECK(inner_count(td.divide) == expected_inner_regions(type));
  }
}

TEST_CASE("smooth conjugate branches") {
  SUBCASE("one branch is a circle") {
    const auto td = trace(family_smooth_conjugate({SmoothBranchData{{{2, {1.0, 0.0}}}}}, 0, 1));
    CHECK(td.nodes.empty());
    CHECK(td.divide.edge_count() == 1);
    CHECK(td.divide.free_circle(1));
  }
  SUBCASE("two branches with contact n") {
    for (double c : {0.0, 1.0})
      for (int n : {2, 3, 4}) {
        CAPTURE(c);
        CAPTURE(n);
        SmoothBranchData a, b;
        if (c != 0) a.coeffs[2] = b.coeffs[2] = c;
        b.coeffs[n] += std::complex<double>(0.0, 1.0);
        const auto td = trace(family_smooth_conjugate({a, b}, 0, 1));
        CHECK(td.count_ok());
        CHECK(td.divide.boundary().empty());
        CHECK(validate(td.divide).empty());
        int between = 0;
        for (int v = 0; v < td.divide.crossing_count(); ++v) {
          const auto [x, y] = td.divide.crossing_branches(v);
          between += x != y;
        }
        CHECK(between == 2 * n + 2);
      }
  }
}

TEST_CASE("demo family") {
  for (int n : {2, 3, 5}) {
    CAPTURE(n);
    const auto td = trace(family_demo_l16(n));
    CHECK(static_cast<int>(td.nodes.size()) == n);
    CHECK(validate(td.divide).empty());
    CHECK(td.divide.boundary().size() == 4);
  }
}

TEST_CASE("composition of two ellipses") {
  const auto a = family_smooth_conjugate({SmoothBranchData{}}, 0, 1);
  const auto b = family_smooth_conjugate({SmoothBranchData{}}, 0.5, 0.5);
  const auto f = family_ellipse_composition({a, b}, {1.0, 1.0});
  REQUIRE(f.expected_nodes == 4);
  const auto td = trace(f);
  CHECK(td.nodes.size() == 4);
  CHECK(validate(td.divide).empty());
}

TEST_CASE("semiquasi") {
  const auto f = family_semiquasi_pp({}, {{1, 0, 1}, {1, 0, 4}}, {1, 2});
  const auto td = trace(f);
  CHECK(td.count_ok());
  CHECK(validate(td.divide).empty());
}

TEST_CASE("trace arguments") {
  const auto f = family_one_puiseux_pair(2, 3, {1.0, 0.0});
  CHECK_THROWS_AS(trace_divide(f, 0.0, 1.3, 200), ValidationError);
  CHECK_THROWS_AS(trace_divide(f, f.t_max * 2, 1.3, 200), ValidationError);
  CHECK_THROWS_AS(trace_divide(f, 0.1, 1.3, 32), ValidationError);
}

TEST_CASE("exports") {
  const auto td = trace(family_demo_l16(2));
  const auto svg = export_svg(td);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<circle") != std::string::npos);
  const auto csv = export_csv(td);
  CHECK(csv.rfind("kind,id,index,x,y,residual\nnode,0,", 0) == 0);
}

TEST_CASE("traced cusp pair matches the stored divide") {
  const auto X = RealPoly2::x(), Y = RealPoly2::y();
  const auto P = (Y * Y + X * X * (X - RealPoly2(0.5))) *
                 (Y * Y + (X - RealPoly2(0.02)).pow(2) * (X - RealPoly2(0.05)) * 2.0);
  const auto f = family_from_polynomial(P, 0.6);
  TraceOptions opt;
  opt.t = f.default_t;
  opt.grid = 800;
  const auto td = trace_with_retries(f, opt);
  const Divide stored = divide_from_json(read_json_file(RSING_TEST_DATA "/two_cusps.divide.json"));
  CHECK(td.nodes.size() == 8);
  CHECK(validate(td.divide).empty());
  CHECK(td.divide.inner_faces().size() == stored.inner_faces().size());
  CHECK(cyclic_boundary_order(td.divide) == cyclic_boundary_order(stored));
  CHECK_FALSE(is_partition(td.divide));
}
