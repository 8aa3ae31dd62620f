#include "rsing/ag_diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rsing/errors.hpp"

namespace rsing {

int AGDiagram::valence(int v) const {
  int k = 0;
  for (auto [a, b] : edges) k += (a == v) + (b == v);
  return k;
}

std::vector<int> AGDiagram::neighbours(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AGDiagram build_ag_diagram(const Divide& d, const FaceColoring& col) {
  if (static_cast<int>(col.color.size()) != d.face_count())
    throw ValidationError("ag diagram: coloring has " + std::to_string(col.color.size()) + " faces, divide has " +
                          std::to_string(d.face_count()));
  for (int e = 1; e <= d.edge_count(); ++e)
    if (col.color[d.face_left(e)] == 0 || col.color[d.face_left(e)] != -col.color[d.face_left(-e)])
      throw ValidationError("ag diagram: coloring does not alternate across edge " + std::to_string(e));

  AGDiagram g;
  g.branch_count = static_cast<int>(d.branches().size());
  for (int v = 0; v < d.crossing_count(); ++v) g.vertices.push_back({0, AGVertex::Source::Crossing, v});
  std::map<int, int> region_vertex;
  for (int f : d.inner_faces()) {
    region_vertex[f] = static_cast<int>(g.vertices.size());
    g.vertices.push_back({col.color[f], AGVertex::Source::Region, f});
  }
  auto add = [&](int a, int b) {
    if (a == b) throw StructuralError("ag diagram: loop at vertex " + std::to_string(a));
    g.edges.push_back({std::min(a, b), std::max(a, b)});
  };
  for (int v = 0; v < d.crossing_count(); ++v) {
    std::map<int, int> corners;
    for (int f : d.corner_faces(v))
      if (d.face_inner(f)) ++corners[f];
    for (auto [f, k] : corners) {
      if (k > 2) throw StructuralError("ag diagram: region meets crossing " + std::to_string(v) + " in more than two sectors");
      for (int r = 0; r < k; ++r) add(v, region_vertex.at(f));
    }
  }
  for (int e = 1; e <= d.edge_count(); ++e) {
    if (!d.inner_edge(e) || d.free_circle(e)) continue;
    const int a = d.face_left(e), b = d.face_left(-e);
    if (d.face_inner(a) && d.face_inner(b)) add(region_vertex.at(a), region_vertex.at(b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (auto [a, b] : g.edges)
    if (g.vertices[a].color != 0 && g.vertices[a].color == g.vertices[b].color)
      throw StructuralError("ag diagram: edge joins two regions of the same color");
  return g;
}

bool is_partition(const Divide& d) {
  const auto inner = d.inner_faces();
  std::map<int, std::set<int>> verts;                  // face -> crossings on its closure
  std::map<std::pair<int, int>, std::vector<int>> shared_cells;  // face pair -> shared 1-cells
  for (int v = 0; v < d.crossing_count(); ++v)
    for (int f : d.corner_faces(v))
      if (d.face_inner(f)) verts[f].insert(v);
  for (int e = 1; e <= d.edge_count(); ++e) {
    if (!d.inner_edge(e)) continue;
    const int a = d.face_left(e), b = d.face_left(-e);
    if (d.face_inner(a) && d.face_inner(b) && a != b) shared_cells[{std::min(a, b), std::max(a, b)}].push_back(e);
  }
  for (std::size_t x = 0; x < inner.size(); ++x)
    for (std::size_t y = x + 1; y < inner.size(); ++y) {
      const int a = inner[x], b = inner[y];
      std::vector<int> common;
      std::set_intersection(verts[a].begin(), verts[a].end(), verts[b].begin(), verts[b].end(),
                            std::back_inserter(common));
      const auto it = shared_cells.find({a, b});
      const int cells = it == shared_cells.end() ? 0 : static_cast<int>(it->second.size());
      if (cells == 0) {
        if (common.size() > 1) return false;
      } else if (cells == 1) {
        const int e = it->second.front();
        if (d.free_circle(e)) {
          if (!common.empty()) return false;
          continue;
        }
        const std::set<int> ends{d.origin(e), d.origin(-e)};
        for (int v : common)
          if (!ends.count(v)) return false;
      } else {
        return false;
      }
    }
  return true;
}

std::vector<Chain> detect_chains(const AGDiagram& g) {
  const int V = static_cast<int>(g.vertices.size());
  std::vector<Chain> found;
  for (int sign : {1, -1}) {
    std::vector<bool> eligible(V, false);
    for (int v = 0; v < V; ++v) {
      const int c = g.vertices[v].color;
      eligible[v] = (c == 0 || c == sign) && g.valence(v) <= 2;
    }
    std::vector<int> comp(V, -1);
    for (int s = 0; s < V; ++s) {
      if (!eligible[s] || comp[s] >= 0) continue;
      std::vector<int> members{s}, stack{s};
      comp[s] = s;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbours(v)) {
          if (!eligible[w] || comp[w] >= 0) continue;
          // chains alternate crossing and region vertices
          if ((g.vertices[v].color == 0) == (g.vertices[w].color == 0)) continue;
          comp[w] = s;
          members.push_back(w);
          stack.push_back(w);
        }
      }
      const bool has_crossing =
          std::any_of(members.begin(), members.end(), [&](int v) { return g.vertices[v].color == 0; });
      if (!has_crossing) continue;
      std::sort(members.begin(), members.end());
      Chain ch{sign, members, false};
      std::map<std::pair<int, int>, int> mult;
      for (auto e : g.edges)
        if (std::binary_search(members.begin(), members.end(), e.first) &&
            std::binary_search(members.begin(), members.end(), e.second) && ++mult[e] > 1)
          ch.double_edge = true;
      found.push_back(std::move(ch));
    }
  }
  std::vector<Chain> out;
  for (std::size_t k = 0; k < found.size(); ++k) {
    bool dominated = false;
    for (std::size_t l = 0; l < found.size() && !dominated; ++l) {
      if (k == l) continue;
      const auto &a = found[k].vertices, &b = found[l].vertices;
      const bool subset = std::includes(b.begin(), b.end(), a.begin(), a.end());
      // strict subset, or an equal set already kept
      dominated = subset && (a.size() < b.size() || l < k);
    }
    if (!dominated) out.push_back(found[k]);
  }
  return out;
}

BranchKind classify_branch_diagram(const AGDiagram& g) {
  if (g.branch_count != 1)
    throw ValidationError("classify: diagram comes from a divide with " + std::to_string(g.branch_count) +
                          " branches, expected 1");
  if (g.vertices.empty()) return BranchKind::RealBranch;  // smooth segment
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    if (g.vertices[v].color != 0) continue;
    const auto nb = g.neighbours(v);
    if (nb.size() == 1) return BranchKind::RealBranch;
    if (nb.size() == 2 && g.vertices[nb[0]].color * g.vertices[nb[1]].color == -1) return BranchKind::RealBranch;
  }
  return BranchKind::ConjugatePair;
}

std::string export_dot(const AGDiagram& g) {
  std::string out = "graph AG {\n";
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const int c = g.vertices[v].color;
    const char* glyph = c == 0 ? "•" : (c > 0 ? "⊕" : "⊖");
    out += "  v" + std::to_string(v) + " [label=\"" + glyph + "\", color=" + std::to_string(c) + "];\n";
  }
  for (auto [a, b] : g.edges) out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

nlohmann::json ag_to_json(const AGDiagram& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices)
    j["vertices"].push_back({{"color", v.color},
                             {"source", v.source == AGVertex::Source::Crossing ? "crossing" : "region"},
                             {"origin", v.origin}});
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
  j["branch_count"] = g.branch_count;
  return j;
}

}  // namespace rsing
