#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace rsing {

/// Dense bivariate polynomial sum c[i][j] x^i y^j.
template <class T>
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(T constant) : c_{{constant}} {}

  static Poly2 x() {
    Poly2 p;
    p.c_ = {{T(0)}, {T(1)}};
    return p;
  }
  static Poly2 y() {
    Poly2 p;
    p.c_ = {{T(0), T(1)}};
    return p;
  }

  int deg_x() const { return static_cast<int>(c_.size()) - 1; }
  int deg_y() const {
    int d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
      for (int j = 0; j < static_cast<int>(c_[i].size()); ++j)
        if (c_[i][j] != T(0)) d = std::max(d, i + j);
    return d;
  }

  T coeff(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(c_.size()) || j < 0 || j >= static_cast<int>(c_[i].size())) return T(0);
    return c_[i][j];
  }
  void set(int i, int j, T v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1);
    if (j >= static_cast<int>(c_[i].size())) c_[i].resize(j + 1, T(0));
    c_[i][j] = v;
  }
  const std::vector<std::vector<T>>& rows() const { return c_; }

  Poly2& operator+=(const Poly2& o) {
    for (int i = 0; i < static_cast<int>(o.c_.size()); ++i)
      for (int j = 0; j < static_cast<int>(o.c_[i].size()); ++j) set(i, j, coeff(i, j) + o.c_[i][j]);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) { return *this += o * T(-1); }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, T s) {
    Poly2 out = a;
    for (auto& row : out.c_)
      for (auto& v : row) v *= s;
    return out;
  }
  friend Poly2 operator*(T s, const Poly2& a) { return a * s; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    if (a.c_.empty() || b.c_.empty()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, {});
    for (int i = 0; i < static_cast<int>(a.c_.size()); ++i)
      for (int j = 0; j < static_cast<int>(a.c_[i].size()); ++j) {
        if (a.c_[i][j] == T(0)) continue;
        for (int k = 0; k < static_cast<int>(b.c_.size()); ++k)
          for (int l = 0; l < static_cast<int>(b.c_[k].size()); ++l)
            out.set(i + k, j + l, out.coeff(i + k, j + l) + a.c_[i][j] * b.c_[k][l]);
      }
    return out;
  }

  Poly2 pow(int e) const {
    Poly2 out(T(1)), base = *this;
    while (e > 0) {
      if (e & 1) out = out * base;
      base = base * base;
      e >>= 1;
    }
    return out;
  }

  /// p(cx + sx x, cy + sy y).
  Poly2 affine(T cx, T sx, T cy, T sy) const {
    const Poly2 X = Poly2(cx) + x() * sx;
    const Poly2 Y = Poly2(cy) + y() * sy;
    std::vector<Poly2> ypow{Poly2(T(1))};
    for (int j = 1; j <= deg_y(); ++j) ypow.push_back(ypow.back() * Y);
    Poly2 out, xp(T(1));
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
      Poly2 row;
      for (int j = 0; j < static_cast<int>(c_[i].size()); ++j)
        if (c_[i][j] != T(0)) row += ypow[j] * c_[i][j];
      out += xp * row;
      xp = xp * X;
    }
    return out;
  }

  double max_abs_coeff() const {
    double m = 0;
    for (const auto& row : c_)
      for (const auto& v : row) m = std::max(m, static_cast<double>(std::abs(v)));
    return m;
  }

 private:
  std::vector<std::vector<T>> c_;
};

using RealPoly2 = Poly2<double>;
using ComplexPoly2 = Poly2<std::complex<double>>;

RealPoly2 real_part(const ComplexPoly2& p);
RealPoly2 imag_part(const ComplexPoly2& p);

/// w = x + (alpha + i beta) y and its partner w^ = x + (alpha - i beta) y.
ComplexPoly2 tangent_coordinate(double alpha, double beta, bool conjugate);

/// Value, gradient and Hessian at a point.
struct Jet2 {
  double f = 0, fx = 0, fy = 0, fxx = 0, fxy = 0, fyy = 0;
};

Jet2 evaluate(const RealPoly2& p, double x, double y);
double value(const RealPoly2& p, double x, double y);

}  // namespace rsing
