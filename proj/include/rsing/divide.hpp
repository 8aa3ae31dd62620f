#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsing/sing_model.hpp"

namespace rsing {

/// One component of the divide, given as a walk of signed edge ids. An open branch walks
/// from a boundary point to a boundary point; a closed branch is a cyclic walk. A closed
/// branch without crossings is a single edge that appears in no rotation.
struct DivideBranch {
  bool closed = false;
  std::vector<int> walk;
  friend bool operator==(const DivideBranch&, const DivideBranch&) = default;
};

/// Combinatorial divide in the disc, stored as a rotation system.
///
/// Vertices 0..crossings-1 are the crossings; boundary points carry ids >= crossings and are
/// listed counterclockwise along the boundary circle. Edges are numbered 1..E; the half-edge
/// +e starts at the tail of e, -e at its head, and each half-edge starts at the vertex whose
/// rotation lists it. Rotations are counterclockwise. `outer` names a half-edge whose left face
/// is the unbounded region; it is needed only when there are no boundary points.
class Divide {
 public:
  Divide(int crossings, std::vector<int> boundary, std::vector<DivideBranch> branches,
         std::map<int, std::vector<int>> rotations, std::optional<int> outer = std::nullopt);

  int crossing_count() const { return crossings_; }
  const std::vector<int>& boundary() const { return boundary_; }
  const std::vector<DivideBranch>& branches() const { return branches_; }
  const std::map<int, std::vector<int>>& rotations() const { return rotations_; }
  std::optional<int> outer() const { return outer_; }
  int edge_count() const { return edges_; }

  /// Faces of the map: every region of the disc cut along the divide, plus (when there are
  /// boundary points) one face outside the disc.
  int face_count() const { return static_cast<int>(face_inner_.size()); }
  int face_left(int signed_half_edge) const;
  bool face_inner(int f) const { return face_inner_[f]; }
  bool face_in_disc(int f) const { return f != outside_face_; }
  std::vector<int> inner_faces() const;
  /// Face inside the disc along the boundary arc from boundary[0] to boundary[1]; -1 without boundary.
  int first_arc_face() const;

  /// Vertex a signed half-edge starts from; -1 for a free circle.
  int origin(int signed_half_edge) const;
  /// True for an edge whose two ends are crossings, or for a free circle.
  bool inner_edge(int e) const;
  bool free_circle(int e) const;
  int branch_of_edge(int e) const { return edge_branch_[e]; }
  /// Faces left of rotation[k] at a crossing, i.e. the face of the corner between
  /// rotation[k] and rotation[k+1].
  std::array<int, 4> corner_faces(int crossing) const;
  /// The branches of the two strands through a crossing (equal for a self-crossing).
  std::array<int, 2> crossing_branches(int crossing) const { return crossing_branches_[crossing]; }
  /// Branch id of each boundary point, in boundary order.
  std::vector<int> boundary_branches() const;

  /// Problems found while reading the walks; reported by validate().
  const std::vector<std::string>& walk_problems() const { return walk_problems_; }
  int component_count() const { return components_; }

 private:
  int half(int signed_half_edge) const;

  int crossings_;
  std::vector<int> boundary_;
  std::vector<DivideBranch> branches_;
  std::map<int, std::vector<int>> rotations_;
  std::optional<int> outer_;
  int edges_ = 0;

  // internal half-edges: 2(e-1) is +e, 2(e-1)+1 is -e; then boundary arcs,
  // 2E+2k running from boundary[k] to boundary[k+1] and 2E+2k+1 back
  std::vector<int> h_origin_;
  std::vector<int> h_pos_;
  std::vector<std::vector<int>> rot_;  // internal vertex -> internal half-edges ccw
  std::vector<int> h_face_;
  std::vector<bool> face_inner_;
  int outside_face_ = -1;
  std::vector<int> edge_branch_;
  std::vector<std::array<int, 2>> crossing_branches_;
  std::vector<std::string> walk_problems_;
  int components_ = 0;
  int euler_defect_ = 0;

  friend std::vector<std::string> validate(const Divide& d);
};

/// Semantic violations, empty when the divide is valid. Malformed rotation systems are
/// rejected earlier by the constructor with a StructuralError.
std::vector<std::string> validate(const Divide& d);

/// +1/-1 per face; 0 for the face outside the disc.
struct FaceColoring {
  std::vector<int> color;
  std::vector<bool> inner;

  FaceColoring flipped() const;
  friend bool operator==(const FaceColoring&, const FaceColoring&) = default;
};

/// Checkerboard coloring anchored at the face inside the first boundary arc (+1), or at the
/// unbounded face (-1) when there are no boundary points.
FaceColoring two_coloring(const Divide& d);

struct BodyReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_characteristic = 0;
  bool empty = true;
  bool connected = false;
  bool simply_connected = false;
  /// Empty body of the divide of a node: one crossing of two open branches.
  bool hyperbolic_node = false;
};

/// Closure of the inner faces.
BodyReport body(const Divide& d);

/// Symmetric; entry (i,i) counts self-crossings of branch i.
std::vector<std::vector<int>> crossing_matrix(const Divide& d);

struct SlotRef {
  enum class Kind { Real, Pair };
  Kind kind = Kind::Real;
  int index = 0;
};

struct CheckItem {
  std::string name;
  long long expected = 0;
  long long actual = 0;
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool pass() const;
};

/// Compares the crossing counts and inner region count of `d` with the numbers predicted by
/// the singularity type. assignment[k] says which real branch or conjugate pair the divide
/// branch k comes from.
CheckReport check_against_type(const Divide& d, const SingularityType& s, const std::vector<SlotRef>& assignment);

/// Boundary word of branch labels, canonical up to rotation, reversal and relabeling.
std::vector<int> cyclic_boundary_order(const Divide& d);

/// h - (2 #crossings - #open branches) + #crossings, which is >= 1 for connected divides.
int euler_excess(const Divide& d);

}  // namespace rsing
