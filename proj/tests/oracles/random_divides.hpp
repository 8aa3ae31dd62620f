#pragma once
// Random divides: wiring diagrams built directly as rotation systems, and traced
// arrangements of random lines and ellipses.

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "rsing/divide.hpp"
#include "rsing/errors.hpp"
#include "rsing/tracer.hpp"

namespace oracle {

/// k strands entering on the left at levels 0..k-1 (bottom to top), swapped by the given
/// sequence of adjacent transpositions (swap[c] exchanges levels swap[c] and swap[c]+1).
inline rsing::Divide wiring_divide(int k, const std::vector<int>& swaps) {
  const int N = static_cast<int>(swaps.size());
  int next_edge = 1;
  std::vector<int> strand_at(k), open_edge(k);
  std::vector<std::vector<int>> walks(k);
  std::map<int, std::vector<int>> rot;
  std::vector<int> left_point(k), right_point(k);
  // boundary ids: right side bottom to top, then left side top to bottom
  for (int l = 0; l < k; ++l) {
    right_point[l] = N + l;
    left_point[l] = N + 2 * k - 1 - l;
  }
  for (int l = 0; l < k; ++l) {
    strand_at[l] = l;
    open_edge[l] = next_edge++;
    rot[left_point[l]] = {open_edge[l]};
    walks[l].push_back(open_edge[l]);
  }
  for (int c = 0; c < N; ++c) {
    const int lo = swaps[c], hi = lo + 1;
    const int in_lo = open_edge[lo], in_hi = open_edge[hi];
    const int out_hi = next_edge++, out_lo = next_edge++;
    // east-north, west-north, west-south, east-south
    rot[c] = {out_hi, -in_hi, -in_lo, out_lo};
    walks[strand_at[lo]].push_back(out_hi);
    walks[strand_at[hi]].push_back(out_lo);
    std::swap(strand_at[lo], strand_at[hi]);
    open_edge[hi] = out_hi;
    open_edge[lo] = out_lo;
  }
  std::vector<int> boundary;
  for (int l = 0; l < k; ++l) rot[right_point[l]] = {-open_edge[l]};
  for (int b = N; b < N + 2 * k; ++b) boundary.push_back(b);
  std::vector<rsing::DivideBranch> branches;
  for (auto& w : walks) branches.push_back({false, w});
  return rsing::Divide(N, boundary, branches, rot);
}

inline std::vector<int> random_swaps(std::mt19937& rng, int k, int length) {
  std::uniform_int_distribution<int> pos(0, k - 2);
  std::vector<int> out;
  for (int c = 0; c < length; ++c) out.push_back(pos(rng));
  return out;
}

/// Product of random lines and ellipses near the origin, traced in [-1,1]^2.
/// Returns nothing when the tracer rejects the picture (near tangencies and the like).
inline std::optional<rsing::Divide> traced_arrangement(std::mt19937& rng, int lines, int ellipses) {
  using rsing::RealPoly2;
  std::uniform_real_distribution<double> U(0, 1);
  const auto X = RealPoly2::x(), Y = RealPoly2::y();
  RealPoly2 P(1.0);
  for (int j = 0; j < lines; ++j) {
    const double th = U(rng) * 3.14159265358979;
    P = P * (X * std::cos(th) + Y * std::sin(th) - RealPoly2(0.4 * (U(rng) - 0.5)));
  }
  for (int j = 0; j < ellipses; ++j) {
    const double th = U(rng) * 3.14159265358979, a = 0.3 + 0.4 * U(rng), b = 0.3 + 0.4 * U(rng);
    const double cx = 0.3 * (U(rng) - 0.5), cy = 0.3 * (U(rng) - 0.5);
    const auto u = (X - RealPoly2(cx)) * std::cos(th) + (Y - RealPoly2(cy)) * std::sin(th);
    const auto v = (Y - RealPoly2(cy)) * std::cos(th) - (X - RealPoly2(cx)) * std::sin(th);
    P = P * (u * u * (1 / (a * a)) + v * v * (1 / (b * b)) - RealPoly2(1.0));
  }
  const auto f = rsing::family_from_polynomial(P, 1.0);
  try {
    return rsing::trace_divide(f, f.default_t, f.window, 300).divide;
  } catch (const rsing::NumericError&) {
    return std::nullopt;
  }
}

}  // namespace oracle
