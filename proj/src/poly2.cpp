#include "rsing/poly2.hpp"

namespace rsing {

RealPoly2 real_part(const ComplexPoly2& p) {
  RealPoly2 out;
  const auto& rows = p.rows();
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < static_cast<int>(rows[i].size()); ++j) out.set(i, j, rows[i][j].real());
  return out;
}

RealPoly2 imag_part(const ComplexPoly2& p) {
  RealPoly2 out;
  const auto& rows = p.rows();
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < static_cast<int>(rows[i].size()); ++j) out.set(i, j, rows[i][j].imag());
  return out;
}

ComplexPoly2 tangent_coordinate(double alpha, double beta, bool conjugate) {
  const std::complex<double> slope(alpha, conjugate ? -beta : beta);
  return ComplexPoly2::x() + ComplexPoly2::y() * slope;
}

Jet2 evaluate(const RealPoly2& p, double x, double y) {
  // Horner in x over rows, each row Horner in y with first and second derivatives
  Jet2 r;
  const auto& rows = p.rows();
  for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
    double g = 0, gy = 0, gyy = 0;
    const auto& row = rows[i];
    for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j) {
      gyy = gyy * y + 2 * gy;
      gy = gy * y + g;
      g = g * y + row[j];
    }
    // r(x) <- r(x) * x + g, tracking d/dx, d2/dx2 and mixed terms
    r.fxx = r.fxx * x + 2 * r.fx;
    r.fxy = r.fxy * x + r.fy;
    r.fx = r.fx * x + r.f;
    r.fyy = r.fyy * x + gyy;
    r.fy = r.fy * x + gy;
    r.f = r.f * x + g;
  }
  return r;
}

double value(const RealPoly2& p, double x, double y) {
  double r = 0;
  const auto& rows = p.rows();
  for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
    double g = 0;
    for (int j = static_cast<int>(rows[i].size()) - 1; j >= 0; --j) g = g * y + rows[i][j];
    r = r * x + g;
  }
  return r;
}

}  // namespace rsing
