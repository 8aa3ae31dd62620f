#pragma once
// Small hand-encoded divides.

#include "rsing/divide.hpp"

namespace fixtures {

using rsing::Divide;

/// Single circle, no crossings.
inline Divide circle() { return Divide(0, {}, {{true, {1}}}, {}); }

inline Divide two_disjoint_circles() { return Divide(0, {}, {{true, {1}}, {true, {2}}}, {}); }

/// Two segments crossing once, boundary points 1..4 counterclockwise.
inline Divide node() {
  return Divide(1, {1, 2, 3, 4}, {{false, {1, 2}}, {false, {3, 4}}},
                {{0, {-1, -3, 2, 4}}, {1, {1}}, {2, {3}}, {3, {-2}}, {4, {-4}}});
}

/// One segment with a single kink: the divide of an ordinary cusp.
inline Divide cusp() {
  return Divide(1, {1, 2}, {{false, {1, 2, 3}}}, {{0, {-1, -2, 2, 3}}, {1, {1}}, {2, {-3}}});
}

/// One closed branch crossing itself once.
inline Divide figure_eight() { return Divide(1, {}, {{true, {1, 2}}}, {{0, {1, -1, -2, 2}}}, 2); }

/// A wide and a tall ellipse meeting in four points.
inline Divide two_circles_four_points() {
  return Divide(4, {}, {{true, {1, 2, 3, 4}}, {true, {5, 6, 7, 8}}},
                {{0, {5, 1, -8, -4}}, {1, {-1, -5, 2, 6}}, {2, {-6, -2, 7, 3}}, {3, {4, 8, -3, -7}}}, -5);
}

/// A cap and a cup meeting twice, endpoints of each branch adjacent on the boundary.
inline Divide cap_and_cup() {
  return Divide(2, {4, 5, 2, 3}, {{false, {1, 2, 3}}, {false, {4, 5, 6}}},
                {{0, {2, 6, -1, -5}}, {1, {-4, -2, 5, 3}}, {2, {1}}, {3, {-3}}, {4, {4}}, {5, {-6}}});
}

}  // namespace fixtures
