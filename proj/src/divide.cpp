#include "rsing/divide.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rsing/errors.hpp"

namespace rsing {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Divide::Divide(int crossings, std::vector<int> boundary, std::vector<DivideBranch> branches,
               std::map<int, std::vector<int>> rotations, std::optional<int> outer)
    : crossings_(crossings),
      boundary_(std::move(boundary)),
      branches_(std::move(branches)),
      rotations_(std::move(rotations)),
      outer_(outer) {
  const int N = crossings_;
  const int B = static_cast<int>(boundary_.size());
  if (N < 0) throw StructuralError("divide: negative crossing count");

  std::map<int, int> boundary_index;
  for (int k = 0; k < B; ++k) {
    if (boundary_[k] < N)
      throw StructuralError("divide: boundary id " + std::to_string(boundary_[k]) + " collides with a crossing id");
    if (!boundary_index.emplace(boundary_[k], k).second)
      throw StructuralError("divide: boundary point " + std::to_string(boundary_[k]) + " listed twice");
  }

  auto note_edge = [&](int h) {
    if (h == 0) throw StructuralError("divide: half-edge id 0 is not allowed");
    edges_ = std::max(edges_, std::abs(h));
  };
  for (const auto& [v, rot] : rotations_)
    for (int h : rot) note_edge(h);
  for (const auto& br : branches_)
    for (int h : br.walk) note_edge(h);
  if (outer_) note_edge(*outer_);
  const int E = edges_;

  // vertices: crossings, then boundary points in boundary order
  const int V = N + B;
  std::vector<int> vertex_id(V);
  for (int v = 0; v < N; ++v) vertex_id[v] = v;
  for (int k = 0; k < B; ++k) vertex_id[N + k] = boundary_[k];

  const int H = 2 * E + 2 * B;
  h_origin_.assign(H, -1);
  h_pos_.assign(H, -1);
  rot_.assign(V, {});
  for (const auto& [v, rot] : rotations_) {
    int iv = -1;
    if (v >= 0 && v < N) {
      iv = v;
      if (rot.size() != 4)
        throw StructuralError("divide: crossing " + std::to_string(v) + " has " + std::to_string(rot.size()) +
                              " half-edges, expected 4");
    } else if (auto it = boundary_index.find(v); it != boundary_index.end()) {
      iv = N + it->second;
      if (rot.size() != 1)
        throw StructuralError("divide: boundary point " + std::to_string(v) + " must have exactly one half-edge");
    } else {
      throw StructuralError("divide: rotation given for unknown vertex " + std::to_string(v));
    }
    for (int h : rot) {
      const int ih = half(h);
      if (h_origin_[ih] >= 0) throw StructuralError("divide: half-edge " + std::to_string(h) + " appears twice");
      h_origin_[ih] = iv;
    }
  }
  for (int v = 0; v < N; ++v)
    if (!rotations_.count(v)) throw StructuralError("divide: crossing " + std::to_string(v) + " has no rotation");
  for (int k = 0; k < B; ++k)
    if (!rotations_.count(boundary_[k]))
      throw StructuralError("divide: boundary point " + std::to_string(boundary_[k]) + " has no rotation");
  for (int e = 1; e <= E; ++e)
    if ((h_origin_[half(e)] < 0) != (h_origin_[half(-e)] < 0))
      throw StructuralError("divide: edge " + std::to_string(e) + " has only one of its half-edges in the rotations");

  for (int v = 0; v < N; ++v)
    for (int h : rotations_.at(v)) rot_[v].push_back(half(h));
  for (int k = 0; k < B; ++k) {
    const int inward = half(rotations_.at(boundary_[k]).front());
    const int fwd = 2 * E + 2 * k;
    const int back_prev = 2 * E + 2 * ((k + B - 1) % B) + 1;
    rot_[N + k] = {fwd, inward, back_prev};
    h_origin_[fwd] = N + k;
    h_origin_[2 * E + 2 * k + 1] = N + (k + 1) % B;
  }
  for (int v = 0; v < V; ++v)
    for (int p = 0; p < static_cast<int>(rot_[v].size()); ++p) h_pos_[rot_[v][p]] = p;

  // faces lie to the left: next(h) = rotation predecessor of twin(h)
  h_face_.assign(H, -1);
  int faces = 0;
  for (int h0 = 0; h0 < H; ++h0) {
    if (h_origin_[h0] < 0 || h_face_[h0] >= 0) continue;
    int h = h0;
    while (h_face_[h] < 0) {
      h_face_[h] = faces;
      const int tw = h ^ 1;
      const auto& r = rot_[h_origin_[tw]];
      const int deg = static_cast<int>(r.size());
      h = r[(h_pos_[tw] + deg - 1) % deg];
    }
    ++faces;
  }
  const int map_faces = faces;
  face_inner_.assign(faces, true);
  if (B > 0) {
    outside_face_ = h_face_[2 * E + 1];
    for (int h = 2 * E; h < H; ++h) face_inner_[h_face_[h]] = false;
  }

  // free circles: a closed branch without crossings
  int map_half_edges = 0;
  for (int h = 0; h < 2 * E; ++h) map_half_edges += h_origin_[h] >= 0;
  for (int e = 1; e <= E; ++e) {
    if (h_origin_[half(e)] >= 0) continue;
    h_face_[half(e)] = faces++;
    face_inner_.push_back(true);
    h_face_[half(-e)] = faces++;
    face_inner_.push_back(false);
  }

  if (B == 0 && map_half_edges > 0) {
    if (!outer_) throw StructuralError("divide: a divide without boundary points needs an \"outer\" half-edge");
    if (std::abs(*outer_) > E || h_origin_[half(*outer_)] < 0)
      throw StructuralError("divide: \"outer\" names a half-edge that is not in the rotations");
    face_inner_[h_face_[half(*outer_)]] = false;
  }

  // connectivity and Euler characteristic of the map on the sphere
  UnionFind uf(V);
  int map_edges = 0;
  for (int h = 0; h < H; h += 2)
    if (h_origin_[h] >= 0) {
      uf.unite(h_origin_[h], h_origin_[h + 1]);
      ++map_edges;
    }
  std::set<int> roots;
  for (int v = 0; v < V; ++v) roots.insert(uf.find(v));
  components_ = static_cast<int>(roots.size());
  euler_defect_ = (V - map_edges + map_faces) - 2 * components_;
  for (int e = 1; e <= E; ++e)
    if (h_origin_[half(e)] < 0) ++components_;

  // walks
  edge_branch_.assign(E + 1, -1);
  crossing_branches_.assign(N, {-1, -1});
  std::vector<int> visits(N, 0);
  auto problem = [&](std::string msg) { walk_problems_.push_back(std::move(msg)); };
  for (int b = 0; b < static_cast<int>(branches_.size()); ++b) {
    const auto& br = branches_[b];
    const std::string tag = "branch " + std::to_string(b);
    if (br.walk.empty()) {
      problem(tag + ": empty walk");
      continue;
    }
    bool usable = true;
    for (int h : br.walk) {
      const int e = std::abs(h);
      if (edge_branch_[e] >= 0) {
        problem(tag + ": edge " + std::to_string(e) + " already used by branch " + std::to_string(edge_branch_[e]));
        usable = false;
      } else {
        edge_branch_[e] = b;
      }
    }
    if (!usable) continue;
    if (br.walk.size() == 1 && h_origin_[half(br.walk[0])] < 0) {
      if (!br.closed) problem(tag + ": a free circle must be a closed branch");
      continue;
    }
    for (int h : br.walk)
      if (h_origin_[half(h)] < 0) {
        problem(tag + ": edge " + std::to_string(std::abs(h)) + " is not attached to any vertex");
        usable = false;
      }
    if (!usable) continue;
    const int len = static_cast<int>(br.walk.size());
    if (!br.closed) {
      if (h_origin_[half(br.walk.front())] < N) problem(tag + ": open branch does not start on the boundary");
      if (h_origin_[half(-br.walk.back())] < N) problem(tag + ": open branch does not end on the boundary");
    }
    const int joints = br.closed ? len : len - 1;
    for (int k = 0; k < joints; ++k) {
      const int in = half(-br.walk[k]);  // twin of the arriving half-edge, at the joint vertex
      const int out = half(br.walk[(k + 1) % len]);
      const int v = h_origin_[in];
      if (h_origin_[out] != v) {
        problem(tag + ": walk breaks between edges " + std::to_string(br.walk[k]) + " and " +
                std::to_string(br.walk[(k + 1) % len]));
        continue;
      }
      if (v >= N) {
        problem(tag + ": walk passes through boundary point " + std::to_string(vertex_id[v]));
        continue;
      }
      if (h_pos_[out] != (h_pos_[in] + 2) % 4)
        problem(tag + ": strands do not cross transversally at crossing " + std::to_string(v));
      if (visits[v] < 2) crossing_branches_[v][visits[v]] = b;
      ++visits[v];
    }
  }
  for (int e = 1; e <= E; ++e)
    if (edge_branch_[e] < 0) problem("edge " + std::to_string(e) + " belongs to no branch");
  for (int v = 0; v < N; ++v)
    if (visits[v] != 2)
      problem("crossing " + std::to_string(v) + " is passed " + std::to_string(visits[v]) + " times, expected 2");
}

int Divide::half(int h) const {
  const int e = std::abs(h);
  if (e < 1 || e > edges_) throw StructuralError("divide: unknown half-edge " + std::to_string(h));
  return 2 * (e - 1) + (h < 0 ? 1 : 0);
}

int Divide::face_left(int h) const { return h_face_[half(h)]; }

int Divide::first_arc_face() const { return boundary_.empty() ? -1 : h_face_[2 * edges_]; }

int Divide::origin(int h) const {
  const int v = h_origin_[half(h)];
  if (v < 0) return -1;
  return v < crossings_ ? v : boundary_[v - crossings_];
}

bool Divide::free_circle(int e) const { return h_origin_[half(e)] < 0; }

bool Divide::inner_edge(int e) const {
  if (free_circle(e)) return true;
  return h_origin_[half(e)] < crossings_ && h_origin_[half(-e)] < crossings_;
}

std::vector<int> Divide::inner_faces() const {
  std::vector<int> out;
  for (int f = 0; f < face_count(); ++f)
    if (face_inner_[f]) out.push_back(f);
  return out;
}

std::array<int, 4> Divide::corner_faces(int v) const {
  std::array<int, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = h_face_[rot_[v][k]];
  return out;
}

std::vector<int> Divide::boundary_branches() const {
  std::vector<int> out;
  for (int b : boundary_) out.push_back(edge_branch_[std::abs(rotations_.at(b).front())]);
  return out;
}

std::vector<std::string> validate(const Divide& d) {
  std::vector<std::string> out = d.walk_problems();
  if (d.boundary().size() % 2 != 0) out.push_back("odd number of boundary points");
  if (d.euler_defect_ != 0) out.push_back("rotation system is not planar (Euler characteristic off by " +
                                          std::to_string(d.euler_defect_) + ")");
  const int nb = static_cast<int>(d.branches().size());
  std::set<std::pair<int, int>> met;
  for (int v = 0; v < d.crossing_count(); ++v) {
    auto [a, b] = d.crossing_branches(v);
    if (a >= 0 && b >= 0) met.insert({std::min(a, b), std::max(a, b)});
  }
  for (int a = 0; a < nb; ++a)
    for (int b = a + 1; b < nb; ++b)
      if (!met.count({a, b}))
        out.push_back("branches " + std::to_string(a) + " and " + std::to_string(b) + " do not intersect");
  if (d.component_count() > 1 && nb > 0 && out.empty()) out.push_back("divide is not connected");
  return out;
}

FaceColoring FaceColoring::flipped() const {
  FaceColoring f = *this;
  for (auto& c : f.color) c = -c;
  return f;
}

FaceColoring two_coloring(const Divide& d) {
  const int F = d.face_count();
  FaceColoring col;
  col.color.assign(F, 0);
  col.inner.assign(F, false);
  for (int f = 0; f < F; ++f) col.inner[f] = d.face_inner(f);
  if (F == 0) return col;

  std::vector<std::vector<int>> adj(F);
  for (int e = 1; e <= d.edge_count(); ++e) {
    const int a = d.face_left(e), b = d.face_left(-e);
    if (a == b) throw ValidationError("two_coloring: edge " + std::to_string(e) + " has the same face on both sides");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int anchor = -1, anchor_color = 0;
  if (!d.boundary().empty()) {
    anchor = d.first_arc_face();
    anchor_color = 1;
  } else if (d.outer()) {
    anchor = d.face_left(*d.outer());
    anchor_color = -1;
  } else {
    for (int f = 0; f < F; ++f)
      if (!d.face_inner(f)) anchor = f;
    anchor_color = -1;
  }
  std::vector<int> stack{anchor};
  col.color[anchor] = anchor_color;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int g : adj[f]) {
      if (col.color[g] == 0) {
        col.color[g] = -col.color[f];
        stack.push_back(g);
      } else if (col.color[g] == col.color[f]) {
        throw ValidationError("two_coloring: faces " + std::to_string(f) + " and " + std::to_string(g) +
                              " are adjacent but forced to the same color");
      }
    }
  }
  for (int f = 0; f < F; ++f)
    if (col.color[f] == 0 && d.face_in_disc(f))
      throw ValidationError("two_coloring: face " + std::to_string(f) + " is not reachable from the anchor face");
  for (int f = 0; f < F; ++f)
    if (!d.face_in_disc(f)) col.color[f] = 0;
  return col;
}

BodyReport body(const Divide& d) {
  BodyReport r;
  const auto inner = d.inner_faces();
  const int F = d.face_count();
  r.faces = static_cast<int>(inner.size());
  r.empty = inner.empty();
  UnionFind uf(F);
  for (int v = 0; v < d.crossing_count(); ++v) {
    const auto c = d.corner_faces(v);
    int first = -1;
    for (int f : c)
      if (d.face_inner(f)) {
        if (first < 0) first = f;
        uf.unite(f, first);
      }
    if (first >= 0) ++r.vertices;
  }
  for (int e = 1; e <= d.edge_count(); ++e) {
    if (!d.inner_edge(e)) continue;
    const int a = d.face_left(e), b = d.face_left(-e);
    if (!d.face_inner(a) && !d.face_inner(b)) continue;
    ++r.edges;
    if (d.free_circle(e)) ++r.vertices;  // a circle needs one 0-cell
    if (d.face_inner(a) && d.face_inner(b)) uf.unite(a, b);
  }
  r.euler_characteristic = r.vertices - r.edges + r.faces;
  std::set<int> roots;
  for (int f : inner) roots.insert(uf.find(f));
  r.connected = roots.size() == 1;
  r.simply_connected = r.connected && r.euler_characteristic == 1;
  int open = 0;
  for (const auto& b : d.branches()) open += !b.closed;
  r.hyperbolic_node = r.empty && d.crossing_count() == 1 && d.branches().size() == 2 && open == 2;
  return r;
}

std::vector<std::vector<int>> crossing_matrix(const Divide& d) {
  const int nb = static_cast<int>(d.branches().size());
  std::vector<std::vector<int>> m(nb, std::vector<int>(nb, 0));
  for (int v = 0; v < d.crossing_count(); ++v) {
    auto [a, b] = d.crossing_branches(v);
    if (a < 0 || b < 0) continue;
    if (a == b) {
      ++m[a][a];
    } else {
      ++m[a][b];
      ++m[b][a];
    }
  }
  return m;
}

bool CheckReport::pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

CheckReport check_against_type(const Divide& d, const SingularityType& s, const std::vector<SlotRef>& assignment) {
  const int nb = static_cast<int>(d.branches().size());
  if (static_cast<int>(assignment.size()) != nb)
    throw ValidationError("check_against_type: assignment has " + std::to_string(assignment.size()) +
                          " entries for " + std::to_string(nb) + " branches");
  CheckReport rep;
  auto add = [&](std::string name, long long expected, long long actual) {
    rep.items.push_back({std::move(name), expected, actual, expected == actual});
  };
  add("total crossings", expected_node_count(s), d.crossing_count());

  std::vector<int> real_hits(s.re_br(), 0), pair_hits(s.im_br(), 0);
  std::vector<bool> usable(nb, false);
  for (int k = 0; k < nb; ++k) {
    const auto& a = assignment[k];
    const bool real = a.kind == SlotRef::Kind::Real;
    const int limit = real ? s.re_br() : s.im_br();
    const bool in_range = a.index >= 0 && a.index < limit;
    add("branch " + std::to_string(k) + " index in range", 1, in_range);
    if (!in_range) continue;
    usable[k] = true;
    (real ? real_hits : pair_hits)[a.index]++;
    add("branch " + std::to_string(k) + (real ? " open (real branch)" : " closed (conjugate pair)"), 1,
        d.branches()[k].closed != real);
  }
  for (int r = 0; r < s.re_br(); ++r) add("real branch " + std::to_string(r) + " assigned once", 1, real_hits[r]);
  for (int p = 0; p < s.im_br(); ++p) add("conjugate pair " + std::to_string(p) + " assigned once", 1, pair_hits[p]);

  const auto m = crossing_matrix(d);
  auto slot = [&](const SlotRef& a, bool conj) {
    return a.kind == SlotRef::Kind::Real ? s.real_slot(a.index) : s.pair_slot(a.index, conj);
  };
  for (int k = 0; k < nb; ++k) {
    if (!usable[k]) continue;
    const auto& a = assignment[k];
    long long expected = 0;
    if (a.kind == SlotRef::Kind::Real) {
      expected = branch_delta(s.real_branches()[a.index]);
    } else {
      expected = 2 * branch_delta(s.conj_pairs()[a.index]) + s.intersection(slot(a, false), slot(a, true)) - 1;
    }
    add("self-crossings of branch " + std::to_string(k), expected, m[k][k]);
  }
  for (int k = 0; k < nb; ++k)
    for (int l = k + 1; l < nb; ++l) {
      if (!usable[k] || !usable[l]) continue;
      const auto &a = assignment[k], &b = assignment[l];
      const bool ra = a.kind == SlotRef::Kind::Real, rb = b.kind == SlotRef::Kind::Real;
      long long expected = 0;
      if (ra && rb) {
        expected = s.intersection(slot(a, false), slot(b, false));
      } else if (ra || rb) {
        expected = 2LL * s.intersection(slot(a, false), slot(b, false));
      } else {
        expected = 2LL * (s.intersection(slot(a, false), slot(b, false)) + s.intersection(slot(a, false), slot(b, true)));
      }
      add("crossings between branches " + std::to_string(k) + " and " + std::to_string(l), expected, m[k][l]);
    }
  add("inner regions", expected_inner_regions(s), static_cast<long long>(d.inner_faces().size()));
  return rep;
}

std::vector<int> cyclic_boundary_order(const Divide& d) {
  const auto word = d.boundary_branches();
  const int B = static_cast<int>(word.size());
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir)
    for (int start = 0; start < B; ++start) {
      std::map<int, int> label;
      std::vector<int> cand;
      for (int k = 0; k < B; ++k) {
        const int idx = dir == 0 ? (start + k) % B : (start - k + B) % B;
        auto [it, fresh] = label.emplace(word[idx], static_cast<int>(label.size()) + 1);
        cand.push_back(it->second);
      }
      if (best.empty() || cand < best) best = cand;
    }
  return best;
}

int euler_excess(const Divide& d) {
  int open = 0;
  for (const auto& b : d.branches()) open += !b.closed;
  const int S = d.crossing_count();
  return static_cast<int>(d.inner_faces().size()) - (2 * S - open) + S;
}

}  // namespace rsing
