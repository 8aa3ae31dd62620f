#include "rsing/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "rsing/errors.hpp"
#include "rsing/json_io.hpp"

namespace rsing {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Pt {
  double u = 0, v = 0;
};

double dist(Pt a, Pt b) { return std::hypot(a.u - b.u, a.v - b.v); }

struct Node {
  Pt p;
  double residual = 0;
  double angle = 0;
  /// Four tangent directions sorted by angle; slot k and k+2 are opposite.
  std::array<Pt, 4> slots{};
  std::array<int, 4> half_edge{0, 0, 0, 0};
};

/// A traced piece of the zero set between two nodes / boundary points, or a closed loop.
struct Path {
  std::vector<Pt> pts;
  int start_node = -1, start_slot = -1;
  int end_node = -1, end_slot = -1;
  bool closed = false;
};

class Tracer {
 public:
  Tracer(RealPoly2 g, int n) : g_(std::move(g)), n_(n), cell_(2.0 / n) {}

  TracedDivide run(const Frame& fr, double window, double t, std::optional<int> expected) {
    sample_grid();
    find_nodes();
    trace_from_nodes();
    cover_remaining();
    return assemble(fr, window, t, expected);
  }

 private:
  Jet2 jet(Pt p) const { return evaluate(g_, p.u, p.v); }
  double val(Pt p) const { return value(g_, p.u, p.v); }
  Pt grid_pt(int i, int j) const { return {-1 + i * cell_, -1 + j * cell_}; }
  static bool inside(Pt p) { return std::abs(p.u) <= 1 && std::abs(p.v) <= 1; }

  void sample_grid() {
    vals_.assign((n_ + 1) * (n_ + 1), 0);
    gu_.assign(vals_.size(), 0);
    gv_.assign(vals_.size(), 0);
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; j <= n_; ++j) {
        const auto J = jet(grid_pt(i, j));
        vals_[idx(i, j)] = J.f;
        gu_[idx(i, j)] = J.fx;
        gv_[idx(i, j)] = J.fy;
      }
  }
  int idx(int i, int j) const { return i * (n_ + 1) + j; }

  static bool changes_sign(double a, double b, double c, double d) {
    const double lo = std::min({a, b, c, d}), hi = std::max({a, b, c, d});
    return lo <= 0 && hi >= 0;
  }

  void find_nodes() {
    std::vector<Pt> crit;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        const int a = idx(i, j), b = idx(i + 1, j), c = idx(i, j + 1), d = idx(i + 1, j + 1);
        if (!changes_sign(gu_[a], gu_[b], gu_[c], gu_[d]) || !changes_sign(gv_[a], gv_[b], gv_[c], gv_[d])) continue;
        Pt p{-1 + (i + 0.5) * cell_, -1 + (j + 0.5) * cell_};
        bool ok = false;
        for (int it = 0; it < 40; ++it) {
          const auto J = jet(p);
          const double det = J.fxx * J.fyy - J.fxy * J.fxy;
          if (det == 0) break;
          const double du = (J.fyy * J.fx - J.fxy * J.fy) / det;
          const double dv = (J.fxx * J.fy - J.fxy * J.fx) / det;
          p.u -= du;
          p.v -= dv;
          if (!inside(p) || std::hypot(du, dv) > 4 * cell_ + 1) break;
          if (std::hypot(du, dv) < 1e-15) {
            ok = true;
            break;
          }
          if (it >= 20 && std::hypot(du, dv) < 1e-12) {
            ok = true;
            break;
          }
        }
        if (!ok || !inside(p)) continue;
        bool dup = false;
        for (const auto& q : crit) dup |= dist(p, q) < 1e-7;
        if (!dup) crit.push_back(p);
      }

    double scale = 0;
    for (double v : vals_) scale = std::max(scale, std::abs(v));
    for (Pt p : crit) {
      auto J = jet(p);
      const double det = J.fxx * J.fyy - J.fxy * J.fxy;
      if (det >= 0 || std::abs(J.f) > 1e-6 * std::max(scale, 1e-300)) continue;
      // Gauss-Newton on (F, F_u, F_v)
      for (int it = 0; it < 30; ++it) {
        J = jet(p);
        const double r[3] = {J.f, J.fx, J.fy};
        const double A[3][2] = {{J.fx, J.fy}, {J.fxx, J.fxy}, {J.fxy, J.fyy}};
        double N00 = 0, N01 = 0, N11 = 0, b0 = 0, b1 = 0;
        for (int k = 0; k < 3; ++k) {
          N00 += A[k][0] * A[k][0];
          N01 += A[k][0] * A[k][1];
          N11 += A[k][1] * A[k][1];
          b0 += A[k][0] * r[k];
          b1 += A[k][1] * r[k];
        }
        const double nd = N00 * N11 - N01 * N01;
        if (nd == 0) break;
        const double du = (N11 * b0 - N01 * b1) / nd, dv = (N00 * b1 - N01 * b0) / nd;
        p.u -= du;
        p.v -= dv;
        if (std::hypot(du, dv) < 1e-16) break;
      }
      J = jet(p);
      Node nd;
      nd.p = p;
      nd.residual = std::max({std::abs(J.f), std::abs(J.fx), std::abs(J.fy)});
      if (nd.residual > 1e-9)
        throw NumericError("tracer: node refinement did not converge (residual " + format_real(nd.residual) + ")");
      if (1 - std::max(std::abs(p.u), std::abs(p.v)) < 2 * cell_)
        throw NumericError("tracer: node within two grid cells of the window boundary");
      // tangent lines: a du^2 + 2 b du dv + c dv^2 = 0
      const double a = J.fxx, b = J.fxy, c = J.fyy;
      const double disc = std::sqrt(std::max(0.0, b * b - a * c));
      std::vector<Pt> dirs;
      if (std::abs(a) >= std::abs(c)) {
        for (double s : {1.0, -1.0}) dirs.push_back({(-b + s * disc), a});
      } else {
        for (double s : {1.0, -1.0}) dirs.push_back({c, (-b + s * disc)});
      }
      std::vector<std::pair<double, Pt>> slots;
      for (Pt d : dirs) {
        const double len = std::hypot(d.u, d.v);
        d = {d.u / len, d.v / len};
        slots.push_back({std::atan2(d.v, d.u), d});
        slots.push_back({std::atan2(-d.v, -d.u), Pt{-d.u, -d.v}});
      }
      std::sort(slots.begin(), slots.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (int k = 0; k < 4; ++k) nd.slots[k] = slots[k].second;
      const double cosang = std::abs(dirs[0].u * dirs[1].u + dirs[0].v * dirs[1].v) /
                            (std::hypot(dirs[0].u, dirs[0].v) * std::hypot(dirs[1].u, dirs[1].v));
      nd.angle = std::acos(std::min(1.0, cosang));
      if (nd.angle <= 1e-3) throw NumericError("tracer: node branches are not transversal");
      nodes_.push_back(nd);
    }
    std::sort(nodes_.begin(), nodes_.end(),
              [](const Node& x, const Node& y) { return x.p.u != y.p.u ? x.p.u < y.p.u : x.p.v < y.p.v; });
    snap_ = 1.5 * cell_;
    for (std::size_t k = 0; k < nodes_.size(); ++k)
      for (std::size_t l = k + 1; l < nodes_.size(); ++l) {
        const double d = dist(nodes_[k].p, nodes_[l].p);
        if (d < 2 * cell_) throw NumericError("tracer: two nodes closer than two grid cells");
        snap_ = std::min(snap_, 0.3 * d);
      }
    step_ = std::min(0.5 * cell_, 0.5 * snap_);
  }

  /// Newton projection onto F = 0 along the gradient.
  bool correct(Pt& p) const {
    for (int it = 0; it < 12; ++it) {
      const auto J = jet(p);
      const double g2 = J.fx * J.fx + J.fy * J.fy;
      if (g2 == 0) return false;
      const double s = J.f / g2;
      p.u -= s * J.fx;
      p.v -= s * J.fy;
      if (std::abs(s) * std::sqrt(g2) < 1e-14) return true;
    }
    return std::abs(val(p)) < 1e-12;
  }

  Pt tangent(Pt p, Pt prefer) const {
    const auto J = jet(p);
    Pt t{-J.fy, J.fx};
    const double len = std::hypot(t.u, t.v);
    if (len == 0) return prefer;
    t = {t.u / len, t.v / len};
    if (t.u * prefer.u + t.v * prefer.v < 0) t = {-t.u, -t.v};
    return t;
  }

  /// Point on the square's boundary between p (inside) and q (outside), moved onto F = 0.
  Pt exit_point(Pt p, Pt q) const {
    double lo = 0, hi = 1;
    for (int it = 0; it < 60; ++it) {
      const double mid = (lo + hi) / 2;
      (inside({p.u + mid * (q.u - p.u), p.v + mid * (q.v - p.v)}) ? lo : hi) = mid;
    }
    Pt e{p.u + lo * (q.u - p.u), p.v + lo * (q.v - p.v)};
    const bool vertical_side = std::abs(std::abs(e.u) - 1) < std::abs(std::abs(e.v) - 1);
    if (vertical_side) e.u = e.u > 0 ? 1 : -1;
    else e.v = e.v > 0 ? 1 : -1;
    for (int it = 0; it < 30; ++it) {
      const auto J = jet(e);
      const double d = vertical_side ? J.fy : J.fx;
      if (d == 0) break;
      const double s = J.f / d;
      (vertical_side ? e.v : e.u) -= s;
      if (std::abs(s) < 1e-15) break;
    }
    e.u = std::clamp(e.u, -1.0, 1.0);
    e.v = std::clamp(e.v, -1.0, 1.0);
    return e;
  }

  int near_node(Pt p) const {
    for (int k = 0; k < static_cast<int>(nodes_.size()); ++k)
      if (dist(p, nodes_[k].p) < snap_) return k;
    return -1;
  }

  int arrival_slot(int node, Pt from) const {
    const Pt c = nodes_[node].p;
    Pt d{from.u - c.u, from.v - c.v};
    int best = 0;
    double bd = -1e300;
    for (int k = 0; k < 4; ++k) {
      const double dot = d.u * nodes_[node].slots[k].u + d.v * nodes_[node].slots[k].v;
      if (dot > bd) {
        bd = dot;
        best = k;
      }
    }
    return best;
  }

  enum class Stop { Node, Boundary, Closed };

  /// Follows the curve from p in direction dir. For loops, `origin` is where to close.
  Stop follow(Path& path, Pt p, Pt dir, std::optional<Pt> origin) const {
    const int max_steps = 400 * n_;
    double h = step_;
    double travelled = 0;
    Pt tdir = tangent(p, dir);
    const int from_node = path.start_node;
    bool left_start = from_node < 0;
    for (int step = 0; step < max_steps; ++step) {
      Pt q{p.u + h * tdir.u, p.v + h * tdir.v};
      if (!inside(q)) {
        path.pts.push_back(exit_point(p, q));
        return Stop::Boundary;
      }
      const int nk = near_node(q);
      if (nk >= 0 && (nk != from_node || left_start)) {
        path.end_node = nk;
        path.end_slot = arrival_slot(nk, p);
        path.pts.push_back(nodes_[nk].p);
        return Stop::Node;
      }
      Pt qc = q;
      if (!correct(qc) || dist(qc, q) > 0.5 * h) {
        if (h < 1e-4 * step_) throw NumericError("tracer: contour following stalled");
        h /= 2;
        continue;
      }
      const Pt nt = tangent(qc, tdir);
      if (nt.u * tdir.u + nt.v * tdir.v < std::cos(20 * kPi / 180)) {
        if (h < 1e-4 * step_) throw NumericError("tracer: contour following stalled at a sharp turn");
        h /= 2;
        continue;
      }
      travelled += dist(p, qc);
      p = qc;
      tdir = nt;
      path.pts.push_back(p);
      h = std::min(step_, h * 1.5);
      if (from_node >= 0 && !left_start && dist(p, nodes_[from_node].p) > 2 * snap_) left_start = true;
      if (origin && travelled > 4 * step_ && dist(p, *origin) < 1.5 * step_) {
        path.pts.push_back(*origin);
        return Stop::Closed;
      }
    }
    throw NumericError("tracer: contour following did not terminate");
  }

  void trace_from_nodes() {
    for (int k = 0; k < static_cast<int>(nodes_.size()); ++k)
      for (int s = 0; s < 4; ++s) {
        if (used(k, s)) continue;
        Path path;
        path.start_node = k;
        path.start_slot = s;
        const Pt d = nodes_[k].slots[s];
        Pt p{nodes_[k].p.u + snap_ * d.u, nodes_[k].p.v + snap_ * d.v};
        const Pt guess = p;
        if (!correct(p) || dist(p, guess) > 0.5 * snap_)
          throw NumericError("tracer: cannot leave a node along its tangent");
        path.pts = {nodes_[k].p, p};
        mark(k, s);
        follow(path, p, d, std::nullopt);
        if (path.end_node >= 0) {
          if (used(path.end_node, path.end_slot))
            throw NumericError("tracer: two strands arrive in the same sector of a node");
          mark(path.end_node, path.end_slot);
        }
        paths_.push_back(std::move(path));
      }
  }

  bool used(int node, int slot) const { return slot_used_.count({node, slot}) > 0; }
  void mark(int node, int slot) { slot_used_.insert({{node, slot}, 1}); }

  void index_paths() {
    bins_.clear();
    for (int k = 0; k < static_cast<int>(paths_.size()); ++k)
      for (Pt p : paths_[k].pts) bins_[bin_of(p)].push_back(p);
  }
  long long bin_of(Pt p) const {
    const long long i = static_cast<long long>(std::floor((p.u + 1) / cell_));
    const long long j = static_cast<long long>(std::floor((p.v + 1) / cell_));
    return i * 1000003LL + j;
  }
  bool covered(Pt p) const {
    const long long i = static_cast<long long>(std::floor((p.u + 1) / cell_));
    const long long j = static_cast<long long>(std::floor((p.v + 1) / cell_));
    for (long long a = i - 1; a <= i + 1; ++a)
      for (long long b = j - 1; b <= j + 1; ++b) {
        auto it = bins_.find(a * 1000003LL + b);
        if (it == bins_.end()) continue;
        for (Pt q : it->second)
          if (dist(p, q) < 0.75 * cell_) return true;
      }
    return false;
  }

  void cover_remaining() {
    index_paths();
    auto try_seed = [&](Pt a, double fa, Pt b, double fb) {
      if ((fa < 0) == (fb < 0) || fa == fb) return;
      const double s = fa / (fa - fb);
      Pt p{a.u + s * (b.u - a.u), a.v + s * (b.v - a.v)};
      for (const auto& nd : nodes_)
        if (dist(p, nd.p) < snap_ + 2 * cell_) return;
      if (covered(p)) return;
      if (!correct(p) || !inside(p)) return;
      if (covered(p)) return;
      Path fwd;
      fwd.pts = {p};
      const Pt t0 = tangent(p, Pt{1, 0});
      const Stop st = follow(fwd, p, t0, p);
      if (st == Stop::Node) throw NumericError("tracer: a node-free seed ran into a node");
      if (st == Stop::Closed) {
        fwd.closed = true;
      } else {
        Path back;
        back.pts = {p};
        if (follow(back, p, Pt{-t0.u, -t0.v}, std::nullopt) != Stop::Boundary)
          throw NumericError("tracer: open curve does not reach the boundary in both directions");
        std::vector<Pt> joined(back.pts.rbegin(), back.pts.rend());
        joined.insert(joined.end(), fwd.pts.begin() + 1, fwd.pts.end());
        fwd.pts = std::move(joined);
      }
      paths_.push_back(std::move(fwd));
      for (Pt q : paths_.back().pts) bins_[bin_of(q)].push_back(q);
    };
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; j <= n_; ++j) {
        if (i < n_) try_seed(grid_pt(i, j), vals_[idx(i, j)], grid_pt(i + 1, j), vals_[idx(i + 1, j)]);
        if (j < n_) try_seed(grid_pt(i, j), vals_[idx(i, j)], grid_pt(i, j + 1), vals_[idx(i, j + 1)]);
      }
  }

  TracedDivide assemble(const Frame& fr, double window, double t, std::optional<int> expected) {
    const int N = static_cast<int>(nodes_.size());
    // boundary points in counterclockwise order
    struct BEnd {
      double angle;
      int path;
      bool at_start;
    };
    std::vector<BEnd> ends;
    for (int k = 0; k < static_cast<int>(paths_.size()); ++k) {
      const auto& P = paths_[k];
      if (P.closed) continue;
      if (P.start_node < 0) ends.push_back({std::atan2(P.pts.front().v, P.pts.front().u), k, true});
      if (P.end_node < 0) ends.push_back({std::atan2(P.pts.back().v, P.pts.back().u), k, false});
    }
    std::sort(ends.begin(), ends.end(), [](const BEnd& a, const BEnd& b) { return a.angle < b.angle; });

    std::map<int, std::vector<int>> rotations;
    std::vector<int> boundary;
    for (int k = 0; k < N; ++k) rotations[k] = std::vector<int>(4, 0);
    for (int k = 0; k < static_cast<int>(paths_.size()); ++k) {
      const auto& P = paths_[k];
      const int e = k + 1;
      if (P.start_node >= 0) rotations[P.start_node][P.start_slot] = e;
      if (P.end_node >= 0) rotations[P.end_node][P.end_slot] = -e;
    }
    for (int b = 0; b < static_cast<int>(ends.size()); ++b) {
      const int id = N + b;
      boundary.push_back(id);
      rotations[id] = {ends[b].at_start ? ends[b].path + 1 : -(ends[b].path + 1)};
    }
    for (int k = 0; k < N; ++k)
      for (int h : rotations[k])
        if (h == 0) throw NumericError("tracer: a node sector was never reached");

    // walks go straight through crossings
    auto origin_of = [&](int h) {
      const auto& P = paths_[std::abs(h) - 1];
      return h > 0 ? std::pair{P.start_node, P.start_slot} : std::pair{P.end_node, P.end_slot};
    };
    std::vector<bool> done(paths_.size() + 1, false);
    std::vector<DivideBranch> branches;
    auto walk_from = [&](int h, bool closed) {
      DivideBranch br{closed, {}};
      for (int guard = 0; guard <= static_cast<int>(paths_.size()); ++guard) {
        if (done[std::abs(h)]) break;
        done[std::abs(h)] = true;
        br.walk.push_back(h);
        const auto [node, slot] = origin_of(-h);
        if (node < 0) break;
        h = rotations[node][(slot + 2) % 4];
      }
      branches.push_back(std::move(br));
    };
    for (int b : boundary) {
      const int h = rotations[b].front();
      if (!done[std::abs(h)]) walk_from(h, false);
    }
    for (int e = 1; e <= static_cast<int>(paths_.size()); ++e)
      if (!done[e]) walk_from(e, true);

    std::optional<int> outer;
    if (boundary.empty() && N > 0) outer = pick_outer(N, boundary, branches, rotations);

    Divide d(N, boundary, branches, rotations, outer);
    std::vector<TracedNode> tn;
    auto to_xy = [&](Pt p) {
      return std::pair{fr.cx + fr.sx * window * p.u, fr.cy + fr.sy * window * p.v};
    };
    for (const auto& nd : nodes_) {
      const auto [x, y] = to_xy(nd.p);
      tn.push_back({x, y, nd.residual, nd.angle});
    }
    std::vector<std::vector<std::pair<double, double>>> lines;
    for (const auto& P : paths_) {
      std::vector<std::pair<double, double>> l;
      for (Pt p : P.pts) l.push_back(to_xy(p));
      lines.push_back(std::move(l));
    }
    return TracedDivide{std::move(d), std::move(tn), std::move(lines), expected, std::nullopt, t, window, n_, 1, fr};
  }

  /// Half-edge whose left face is the unbounded one: that face has negative signed area.
  int pick_outer(int N, const std::vector<int>& boundary, const std::vector<DivideBranch>& branches,
                 const std::map<int, std::vector<int>>& rotations) const {
    const Divide probe(N, boundary, branches, rotations, 1);
    std::map<int, double> area;
    for (int e = 1; e <= static_cast<int>(paths_.size()); ++e) {
      if (paths_[e - 1].closed) continue;
      const auto& pts = paths_[e - 1].pts;
      double a = 0;
      for (std::size_t k = 0; k + 1 < pts.size(); ++k) a += pts[k].u * pts[k + 1].v - pts[k + 1].u * pts[k].v;
      area[probe.face_left(e)] += a / 2;
      area[probe.face_left(-e)] -= a / 2;
    }
    int best = -1;
    double best_area = 0;
    for (auto [f, a] : area)
      if (a < best_area) {
        best_area = a;
        best = f;
      }
    if (best < 0) throw NumericError("tracer: no face with negative orientation");
    for (int e = 1; e <= static_cast<int>(paths_.size()); ++e) {
      if (paths_[e - 1].closed) continue;
      if (probe.face_left(e) == best) return e;
      if (probe.face_left(-e) == best) return -e;
    }
    throw NumericError("tracer: outer face has no edge");
  }

  RealPoly2 g_;
  int n_;
  double cell_;
  double snap_ = 0, step_ = 0;
  std::vector<double> vals_, gu_, gv_;
  std::vector<Node> nodes_;
  std::vector<Path> paths_;
  std::map<std::pair<int, int>, int> slot_used_;
  std::unordered_map<long long, std::vector<Pt>> bins_;
};

}  // namespace

TracedDivide trace_divide(const FamilySpec& f, double t, double window, int grid_n) {
  if (!(t > 0) || t > f.t_max)
    throw ValidationError("trace: t=" + format_real(t) + " outside (0, " + format_real(f.t_max) + "]");
  if (grid_n < 64) throw ValidationError("trace: grid must be at least 64");
  if (!(window > 0)) throw ValidationError("trace: window must be positive");
  const Frame fr = f.frame(t);
  RealPoly2 g = f.at(t).affine(fr.cx, fr.sx * window, fr.cy, fr.sy * window);
  const double m = g.max_abs_coeff();
  if (m == 0) throw NumericError("trace: polynomial vanishes identically");
  g = g * (1.0 / m);
  Tracer tr(std::move(g), grid_n);
  auto td = tr.run(fr, window, t, f.expected_nodes);
  td.expected_boundary = f.expected_boundary;
  return td;
}

TracedDivide trace_with_retries(const FamilySpec& f, const TraceOptions& opt) {
  double t = opt.t > 0 ? opt.t : f.default_t;
  const double window = opt.window > 0 ? opt.window : f.window;
  int grid = opt.grid;
  std::optional<TracedDivide> last;
  std::string last_error;
  for (int attempt = 0; attempt <= opt.retries; ++attempt) {
    try {
      auto td = trace_divide(f, t, window, grid);
      td.attempts = attempt + 1;
      if (td.count_ok()) return td;
      last_error = "found " + std::to_string(td.nodes.size()) + " nodes and " +
                   std::to_string(td.divide.boundary().size()) + " boundary points";
      last.emplace(std::move(td));
    } catch (const NumericError& e) {
      last_error = e.what();
    }
    t /= 2;
    grid *= 2;
  }
  if (last) return std::move(*last);
  throw NumericError("trace failed after " + std::to_string(opt.retries) + " retries: " + last_error);
}

std::string export_svg(const TracedDivide& td) {
  const auto& fr = td.frame;
  const double W = 600;
  auto sx = [&](double x) { return format_real((x - fr.cx) / (fr.sx * td.window) * W / 2 + W / 2); };
  auto sy = [&](double y) { return format_real(W / 2 - (y - fr.cy) / (fr.sy * td.window) * W / 2); };
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\" stroke=\"black\"/>\n";
  for (const auto& line : td.polylines) {
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t k = 0; k < line.size(); ++k)
      out += (k ? " " : "") + sx(line[k].first) + "," + sy(line[k].second);
    out += "\"/>\n";
  }
  for (const auto& n : td.nodes) out += "<circle cx=\"" + sx(n.x) + "\" cy=\"" + sy(n.y) + "\" r=\"3\" fill=\"red\"/>\n";
  out += "</svg>\n";
  return out;
}

std::string export_csv(const TracedDivide& td) {
  std::string out = "kind,id,index,x,y,residual\n";
  for (std::size_t k = 0; k < td.nodes.size(); ++k)
    out += "node," + std::to_string(k) + ",0," + format_real(td.nodes[k].x) + "," + format_real(td.nodes[k].y) + "," +
           format_real(td.nodes[k].residual) + "\n";
  for (std::size_t e = 0; e < td.polylines.size(); ++e)
    for (std::size_t k = 0; k < td.polylines[e].size(); ++k)
      out += "edge," + std::to_string(e + 1) + "," + std::to_string(k) + "," + format_real(td.polylines[e][k].first) +
             "," + format_real(td.polylines[e][k].second) + ",\n";
  return out;
}

}  // namespace rsing
