#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsing/divide.hpp"
#include "rsing/morsifier.hpp"

namespace rsing {

struct TracedNode {
  double x = 0, y = 0;
  /// max(|F|, |F_u|, |F_v|) in viewport coordinates with normalized coefficients.
  double residual = 0;
  /// Angle between the two branch tangents (radians, in (0, pi/2]).
  double crossing_angle = 0;
};

struct TraceOptions {
  /// <= 0 selects the family default.
  double t = 0;
  /// <= 0 selects the family default.
  double window = 0;
  int grid = 400;
  int retries = 3;
};

struct TracedDivide {
  Divide divide;
  std::vector<TracedNode> nodes;
  /// One polyline per edge of the divide, edge k at index k-1, in (x, y) coordinates.
  std::vector<std::vector<std::pair<double, double>>> polylines;
  std::optional<int> expected_nodes;
  std::optional<int> expected_boundary;
  double t = 0;
  double window = 0;
  int grid = 0;
  int attempts = 1;
  Frame frame;

  bool count_ok() const {
    return (!expected_nodes || *expected_nodes == static_cast<int>(nodes.size())) &&
           (!expected_boundary || *expected_boundary == static_cast<int>(divide.boundary().size()));
  }
};

/// One tracing attempt at the given t, window and grid.
TracedDivide trace_divide(const FamilySpec& f, double t, double window, int grid_n);

/// Traces and, on a numerical failure or a node count different from the expected one,
/// halves t and doubles the grid up to `retries` times.
TracedDivide trace_with_retries(const FamilySpec& f, const TraceOptions& opt);

std::string export_svg(const TracedDivide& td);
std::string export_csv(const TracedDivide& td);

}  // namespace rsing
