#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "rsing/divide.hpp"

namespace rsing {

struct AGVertex {
  enum class Source { Crossing, Region };
  /// 0 for a crossing, +1/-1 for an inner region.
  int color = 0;
  Source source = Source::Crossing;
  /// Crossing id or face id in the divide.
  int origin = 0;
};

/// A'Campo–Gusein-Zade diagram: crossings first, then inner regions in face order.
/// Parallel edges are stored individually; every edge is stored with first < second.
struct AGDiagram {
  std::vector<AGVertex> vertices;
  std::vector<std::pair<int, int>> edges;
  int branch_count = 0;

  int valence(int v) const;
  /// Neighbours of v with repetition, ascending.
  std::vector<int> neighbours(int v) const;
};

/// Throws ValidationError if `col` is not a checkerboard coloring of `d`.
AGDiagram build_ag_diagram(const Divide& d, const FaceColoring& col);

/// True iff any two closed inner regions meet in nothing, a single vertex or a single
/// closed 1-cell.
bool is_partition(const Divide& d);

struct Chain {
  int sign = 1;
  std::vector<int> vertices;
  /// Some edge inside the chain is doubled.
  bool double_edge = false;
  int length() const { return static_cast<int>(vertices.size()); }
};

/// Maximal connected groups of crossing vertices of valence <= 2 linked to region vertices
/// of one sign and valence <= 2. Reported for both signs, duplicates and sub-chains removed.
std::vector<Chain> detect_chains(const AGDiagram& g);

enum class BranchKind { RealBranch, ConjugatePair };

/// For the diagram of a one-branch divide: a real branch has a univalent crossing vertex or a
/// bivalent one adjacent to regions of both signs.
BranchKind classify_branch_diagram(const AGDiagram& g);

std::string export_dot(const AGDiagram& g);
nlohmann::json ag_to_json(const AGDiagram& g);

}  // namespace rsing
