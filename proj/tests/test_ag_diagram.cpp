#include <doctest.h>

#include "fixtures.hpp"
#include "rsing/ag_diagram.hpp"
#include "rsing/errors.hpp"
#include "rsing/json_io.hpp"

#include <algorithm>

using namespace rsing;

namespace {

AGDiagram diagram(const Divide& d) { return build_ag_diagram(d, two_coloring(d)); }

}  // namespace

TEST_CASE("build") {
  auto g = diagram(fixtures::figure_eight());
  REQUIRE(g.vertices.size() == 3);
  CHECK(g.vertices[0].color == 0);
  CHECK(g.vertices[1].color == g.vertices[2].color);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

  g = diagram(fixtures::cusp());
  REQUIRE(g.vertices.size() == 2);
  CHECK(g.vertices[1].color != 0);
  CHECK(g.edges.size() == 1);

  g = diagram(fixtures::node());
  CHECK(g.vertices.size() == 1);
  CHECK(g.edges.empty());

  // four crossings and five inner regions: mu of two transversal smooth conjugate pairs
  g = diagram(fixtures::two_circles_four_points());
  CHECK(g.vertices.size() == 9);
  for (auto [a, b] : g.edges) CHECK((g.vertices[a].color == 0 || g.vertices[a].color != g.vertices[b].color));
}

TEST_CASE("build rejects a foreign coloring") {
  const auto d = fixtures::figure_eight();
  auto col = two_coloring(d);
  col.color[d.face_left(1)] *= -1;
  CHECK_THROWS_AS(build_ag_diagram(d, col), ValidationError);
  CHECK_THROWS_AS(build_ag_diagram(d, two_coloring(fixtures::cusp())), ValidationError);
}

TEST_CASE("flipping the coloring flips region colors only") {
  const auto d = fixtures::two_circles_four_points();
  const auto g = build_ag_diagram(d, two_coloring(d));
  const auto h = build_ag_diagram(d, two_coloring(d).flipped());
  REQUIRE(g.vertices.size() == h.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) CHECK(g.vertices[v].color == -h.vertices[v].color);
  CHECK(g.edges == h.edges);
}

TEST_CASE("partition") {
  CHECK(is_partition(fixtures::cusp()));
  CHECK(is_partition(fixtures::node()));
  CHECK(is_partition(fixtures::figure_eight()));
  CHECK(is_partition(fixtures::two_circles_four_points()));
}

TEST_CASE("chains") {
  auto ch = detect_chains(diagram(fixtures::cusp()));
  REQUIRE(ch.size() == 1);
  CHECK(ch[0].length() == 2);

  ch = detect_chains(diagram(fixtures::node()));
  REQUIRE(ch.size() == 1);
  CHECK(ch[0].vertices == std::vector<int>{0});

  // every crossing of two ellipses has valence 4
  CHECK(detect_chains(diagram(fixtures::two_circles_four_points())).empty());

  const auto d = fixtures::figure_eight();
  const auto a = detect_chains(build_ag_diagram(d, two_coloring(d)));
  const auto b = detect_chains(build_ag_diagram(d, two_coloring(d).flipped()));
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].vertices == b[k].vertices);
}

TEST_CASE("classify") {
  CHECK(classify_branch_diagram(diagram(fixtures::cusp())) == BranchKind::RealBranch);
  CHECK(classify_branch_diagram(diagram(fixtures::circle())) == BranchKind::ConjugatePair);
  CHECK(classify_branch_diagram(diagram(fixtures::figure_eight())) == BranchKind::ConjugatePair);
  CHECK_THROWS_AS(classify_branch_diagram(diagram(fixtures::node())), ValidationError);
  CHECK(classify_branch_diagram(AGDiagram{{}, {}, 1}) == BranchKind::RealBranch);
}

TEST_CASE("dot export") {
  CHECK(export_dot(AGDiagram{}) == "graph AG {\n}\n");
  CHECK(export_dot(diagram(fixtures::node())) == "graph AG {\n  v0 [label=\"•\", color=0];\n}\n");
  const auto text = export_dot(diagram(fixtures::cusp()));
  CHECK(text.find("v0 -- v1;") != std::string::npos);
  CHECK(ag_to_json(diagram(fixtures::cusp()))["edges"].size() == 1);
}

TEST_CASE("two cusps with a common tangent") {
  const Divide d = divide_from_json(read_json_file(RSING_TEST_DATA "/two_cusps.divide.json"));
  CHECK(validate(d).empty());
  CHECK(d.crossing_count() == 8);
  CHECK(d.inner_faces().size() == 7);
  CHECK(d.branches().size() == 2);
  CHECK_FALSE(is_partition(d));
  const auto g = build_ag_diagram(d, two_coloring(d));
  CHECK(g.vertices.size() == 15);
  CHECK(std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end());
}
