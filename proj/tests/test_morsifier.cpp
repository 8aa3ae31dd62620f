#include <doctest.h>

#include <cmath>
#include <numeric>

#include "rsing/errors.hpp"
#include "rsing/morsifier.hpp"

using namespace rsing;

namespace {

double horner(const std::vector<double>& c, double s) {
  double v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * s + *it;
  return v;
}

double max_diff(const RealPoly2& a, const RealPoly2& b) { return (a - b).max_abs_coeff(); }

}  // namespace

TEST_CASE("poly2 arithmetic and jets") {
  const auto X = RealPoly2::x(), Y = RealPoly2::y();
  const auto p = (X * X - Y * 3.0 + RealPoly2(2.0)).pow(2);
  CHECK(p.total_degree() == 4);
  CHECK(p.coeff(4, 0) == doctest::Approx(1));
  CHECK(p.coeff(2, 1) == doctest::Approx(-6));
  CHECK(p.coeff(0, 0) == doctest::Approx(4));
  const auto J = evaluate(p, 0.7, -0.4);
  const double g = 0.49 + 1.2 + 2;
  CHECK(J.f == doctest::Approx(g * g));
  CHECK(J.fx == doctest::Approx(2 * g * 1.4));
  CHECK(J.fy == doctest::Approx(2 * g * -3));
  CHECK(J.fxx == doctest::Approx(2 * 1.4 * 1.4 + 2 * g * 2));
  CHECK(J.fxy == doctest::Approx(2 * 1.4 * -3));
  CHECK(J.fyy == doctest::Approx(18));
  const auto q = p.affine(0.5, 2.0, -1.0, 0.25);
  CHECK(value(q, 0.1, 0.3) == doctest::Approx(value(p, 0.5 + 0.2, -1.0 + 0.075)));
}

TEST_CASE("tangent coordinate") {
  const auto w = tangent_coordinate(0.5, 2.0, false);
  const auto wh = tangent_coordinate(0.5, 2.0, true);
  // w * w^ = (x + alpha y)^2 + beta^2 y^2
  const auto n = real_part(w * wh);
  CHECK(value(n, 1.0, 1.0) == doctest::Approx(1.5 * 1.5 + 4));
  CHECK(imag_part(w * wh).max_abs_coeff() < 1e-14);
}

TEST_CASE("chebyshev-like polynomials") {
  for (int p = 2; p <= 6; ++p)
    for (double c : {0.5, 1.0, 2.0}) {
      CAPTURE(p);
      CAPTURE(c);
      const auto ch = chebyshev_like(p, c);
      REQUIRE(ch.coeffs.size() == static_cast<std::size_t>(p + 1));
      CHECK(ch.coeffs[p] == 1.0);
      CHECK(std::abs(ch.coeffs[p - 1]) < 1e-10);
      REQUIRE(ch.critical_values.size() == static_cast<std::size_t>(p - 1));
      for (int i = 0; i < p - 1; ++i) {
        const double want = ((p - 2 - i) % 2 == 0 ? -2 : 2) * c;
        CHECK(std::abs(ch.critical_values[i] - want) < 1e-10);
        CHECK(std::abs(horner(ch.coeffs, ch.critical_points[i]) - want) < 1e-10);
      }
      CHECK(ch.critical_values.back() == doctest::Approx(-2 * c));
    }
  CHECK_THROWS_AS(chebyshev_like(1, 1.0), ValidationError);
  CHECK_THROWS_AS(chebyshev_like(3, 0.0), ValidationError);
}

TEST_CASE("pair coefficients") {
  for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{3, 5}, std::pair{4, 5}}) {
    CAPTURE(p);
    const auto at0 = solve_pair_coefficients(p, q, 1.3, 0.0);
    const auto ch = chebyshev_like(p, 1.3);
    for (int i = 0; i <= p - 2; ++i) CHECK(at0.b[i] == doctest::Approx(ch.coeffs[i]));
    const double tau = 0.2;
    const auto s = solve_pair_coefficients(p, q, 1.3, tau);
    CHECK(s.residual < 1e-10);
    const double k = (p + q) / 2.0;
    std::vector<double> Q = s.b;
    Q.push_back(0);
    Q.push_back(1);
    for (int i = 0; i < p - 1; ++i) {
      const double mu = s.critical_points[i];
      const double v = std::pow(1 + tau * mu, -k) * horner(Q, mu);
      CHECK(std::abs(std::abs(v) - 2.6) < 1e-9);
    }
  }
  CHECK_THROWS_AS(solve_pair_coefficients(2, 3, 1.0, -0.1), ValidationError);
}

TEST_CASE("one pair family") {
  const std::complex<double> a(0.8, -0.3);
  const auto f = family_one_puiseux_pair(3, 4, a, 0.2, 1.5);
  CHECK(f.expected_nodes == 14);
  CHECK(f.multiplicity == 6);
  CHECK(max_diff(f.at(0.0), one_pair_germ(3, 4, a, 0.2, 1.5)) < 1e-12);
  CHECK(f.default_t > 0);
  CHECK(f.default_t <= f.t_max);
  CHECK_THROWS_AS(family_one_puiseux_pair(2, 4, a), ValidationError);
  CHECK_THROWS_AS(family_one_puiseux_pair(3, 2, a), ValidationError);
  CHECK_THROWS_AS(family_one_puiseux_pair(2, 3, 0.0), ValidationError);
  CHECK_THROWS_AS(family_one_puiseux_pair(2, 3, a, 0, 0), ValidationError);
}

TEST_CASE("smooth conjugate family") {
  SmoothBranchData a{{{2, {1.0, 0.0}}}}, b{{{2, {1.0, 0.0}}, {3, {0.0, 1.0}}}}, c{{{2, {2.0, 0.0}}}};
  CHECK(first_difference(a, b) == 3);
  CHECK(first_difference(a, c) == 2);
  CHECK(first_difference(a, a) == -1);
  const auto f = family_smooth_conjugate({a, b, c}, 0, 1);
  CHECK(f.expected_nodes == 8 + 6 + 6);
  CHECK(f.multiplicity == 6);
  CHECK_THROWS_AS(family_smooth_conjugate({a, a}, 0, 1), ValidationError);
  CHECK_THROWS_AS(family_smooth_conjugate({SmoothBranchData{{{1, 1.0}}}}, 0, 1), ValidationError);
  CHECK_THROWS_AS(family_smooth_conjugate({}, 0, 1), ValidationError);
}

TEST_CASE("semiquasihomogeneous family") {
  const QuadraticForm q1{1, 0, 1}, q2{1, 0, 4};
  const auto f = family_semiquasi_pp({}, {q1, q2}, {1, 2});
  CHECK(f.expected_nodes == 4);
  // x^2 + y^2 = 2 and x^2 + 4 y^2 = 1 are disjoint
  CHECK_THROWS_AS(family_semiquasi_pp({}, {q1, q2}, {2, 1}), ValidationError);
  CHECK_THROWS_AS(family_semiquasi_pp({}, {q1, QuadraticForm{2, 0, 2}}, {1, 2}), ValidationError);
  CHECK_THROWS_AS(family_semiquasi_pp({}, {QuadraticForm{1, 3, 1}}, {1}), ValidationError);
  CHECK_THROWS_AS(family_semiquasi_pp({}, {q1}, {-1}), ValidationError);
  CHECK_THROWS_AS(family_semiquasi_pp({{1, 0}, {2, 0}}, {}, {}), ValidationError);
  const auto g = family_semiquasi_pp({{1, 0}, {0, 1}}, {q1}, {1});
  CHECK(g.expected_nodes == 1 + 4);
}

TEST_CASE("ellipse composition") {
  const auto a = family_one_puiseux_pair(2, 3, {1.0, 0.0});
  const auto b = family_smooth_conjugate({SmoothBranchData{}}, 1.0, 0.5);
  const auto f = family_ellipse_composition({a, b}, {1.0, 1.0});
  CHECK(f.expected_nodes == 5 + 0 + 4 * 2);
  CHECK(f.multiplicity == 6);
  CHECK(f.tangents.size() == 2);
  CHECK_THROWS_AS(family_ellipse_composition({a, a}, {1.0, 2.0}), ValidationError);
  CHECK_THROWS_AS(family_ellipse_composition({a, b}, {1.0}), ValidationError);
  const auto single = family_ellipse_composition({a}, {1.0});
  CHECK(single.expected_nodes == a.expected_nodes);
}

TEST_CASE("demo family") {
  const auto f = family_demo_l16(4);
  CHECK(f.expected_nodes == 4);
  const auto X = RealPoly2::x(), Y = RealPoly2::y();
  RealPoly2 prod(1.0);
  for (int k = 1; k <= 4; ++k) prod = prod * (X - RealPoly2(k * 0.3));
  const auto want = (Y - X * X * 0.3).pow(2) - prod.pow(2);
  CHECK(max_diff(f.at(0.3), want) < 1e-12);
  CHECK_THROWS_AS(family_demo_l16(1), ValidationError);
}
