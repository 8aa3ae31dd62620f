#include "rsing/morsifier.hpp"

#include <cmath>
#include <numeric>

#include "rsing/errors.hpp"

namespace rsing {

namespace {

constexpr double kPi = 3.14159265358979323846;

double poly_eval(const std::vector<double>& c, double x) {
  double r = 0;
  for (std::size_t k = c.size(); k-- > 0;) r = r * x + c[k];
  return r;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return d;
}

/// Solves A x = r in place by Gaussian elimination with partial pivoting.
std::vector<double> solve_dense(std::vector<std::vector<double>> A, std::vector<double> r) {
  const int n = static_cast<int>(r.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(A[row][col]) > std::abs(A[piv][col])) piv = row;
    if (std::abs(A[piv][col]) < 1e-300) throw NumericError("singular Jacobian");
    std::swap(A[col], A[piv]);
    std::swap(r[col], r[piv]);
    for (int row = col + 1; row < n; ++row) {
      const double f = A[row][col] / A[col][col];
      for (int k = col; k < n; ++k) A[row][k] -= f * A[col][k];
      r[row] -= f * r[col];
    }
  }
  std::vector<double> x(n);
  for (int row = n - 1; row >= 0; --row) {
    double s = r[row];
    for (int k = row + 1; k < n; ++k) s -= A[row][k] * x[k];
    x[row] = s / A[row][row];
  }
  return x;
}

RealPoly2 modulus_squared(const ComplexPoly2& p) {
  const auto re = real_part(p), im = imag_part(p);
  return re * re + im * im;
}

void check_tangent(double beta) {
  if (beta == 0 || !std::isfinite(beta)) throw ValidationError("tangent: beta must be nonzero");
}

/// Half-axes of the ellipse (x + alpha y)^2 + beta^2 y^2 = 1.
std::pair<double, double> ellipse_extent(double alpha, double beta) {
  return {std::sqrt(1 + alpha * alpha / (beta * beta)), 1 / std::abs(beta)};
}

double form_value(const QuadraticForm& q, double x, double y) { return q.A * x * x + q.B * x * y + q.C * y * y; }

/// Largest eigenvalue of the form's matrix.
double form_lambda_max(const QuadraticForm& q) {
  const double m = (q.A + q.C) / 2, d = std::hypot((q.A - q.C) / 2, q.B / 2);
  return m + d;
}
double form_lambda_min(const QuadraticForm& q) {
  const double m = (q.A + q.C) / 2, d = std::hypot((q.A - q.C) / 2, q.B / 2);
  return m - d;
}

/// Intersection points of {q1 = c1} and {q2 = c2}; empty unless there are four real ones.
std::vector<std::pair<double, double>> conic_intersections(const QuadraticForm& q1, double c1, const QuadraticForm& q2,
                                                           double c2) {
  // points lie on the lines c2 q1 - c1 q2 = 0
  const QuadraticForm g{c2 * q1.A - c1 * q2.A, c2 * q1.B - c1 * q2.B, c2 * q1.C - c1 * q2.C};
  const double disc = g.B * g.B - 4 * g.A * g.C;
  if (disc <= 0) return {};
  std::vector<std::pair<double, double>> dirs;
  if (std::abs(g.A) > 1e-14 * (std::abs(g.B) + std::abs(g.C))) {
    // A x^2 + B x + C = 0 with y = 1
    for (double sgn : {1.0, -1.0}) dirs.push_back({(-g.B + sgn * std::sqrt(disc)) / (2 * g.A), 1.0});
  } else {
    dirs.push_back({1.0, 0.0});
    dirs.push_back({-g.C, g.B});
  }
  std::vector<std::pair<double, double>> pts;
  for (auto [dx, dy] : dirs) {
    const double s = std::sqrt(c1 / form_value(q1, dx, dy));
    pts.push_back({s * dx, s * dy});
    pts.push_back({-s * dx, -s * dy});
  }
  return pts;
}

void check_quadrics(const std::vector<QuadraticForm>& quadrics, const std::vector<double>& levels,
                    const std::string& what) {
  std::vector<std::pair<double, double>> all;
  for (std::size_t i = 0; i < quadrics.size(); ++i)
    for (std::size_t j = i + 1; j < quadrics.size(); ++j) {
      const auto pts = conic_intersections(quadrics[i], levels[i], quadrics[j], levels[j]);
      if (pts.size() != 4)
        throw ValidationError(what + ": the conics " + std::to_string(i) + " and " + std::to_string(j) +
                              " do not meet in four real points");
      all.insert(all.end(), pts.begin(), pts.end());
    }
  for (std::size_t k = 0; k < all.size(); ++k)
    for (std::size_t l = k + 1; l < all.size(); ++l)
      if (std::hypot(all[k].first - all[l].first, all[k].second - all[l].second) < 1e-9)
        throw ValidationError(what + ": intersection points of the conics are not distinct");
}

QuadraticForm tangent_ellipse(double alpha, double beta) {
  // (x + alpha y)^2 + beta^2 y^2
  return {1.0, 2 * alpha, alpha * alpha + beta * beta};
}

}  // namespace

int first_difference(const SmoothBranchData& a, const SmoothBranchData& b) {
  std::map<int, std::pair<std::complex<double>, std::complex<double>>> merged;
  for (auto [n, v] : a.coeffs) merged[n].first = v;
  for (auto [n, v] : b.coeffs) merged[n].second = v;
  for (auto [n, pr] : merged)
    if (pr.first != pr.second) return n;
  return -1;
}

FamilySpec family_smooth_conjugate(const std::vector<SmoothBranchData>& branches, double alpha, double beta) {
  check_tangent(beta);
  if (branches.empty()) throw ValidationError("smooth conjugate family: no branches");
  int expected = 0;
  int contact = 2;
  double spread = 0;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    for (auto [n, v] : branches[i].coeffs)
      if (n <= 1) throw ValidationError("smooth conjugate family: exponents must exceed 1");
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      const int nij = first_difference(branches[i], branches[j]);
      if (nij < 0)
        throw ValidationError("smooth conjugate family: branches " + std::to_string(i) + " and " +
                              std::to_string(j) + " coincide");
      expected += 2 * (nij + 1);
      contact = std::max(contact, nij);
    }
    double s = 0;
    for (auto [n, v] : branches[i].coeffs) s += std::abs(v);
    spread = std::max(spread, s);
  }
  const auto w = tangent_coordinate(alpha, beta, false);
  const auto wh = tangent_coordinate(alpha, beta, true);
  std::vector<RealPoly2> phis;
  for (const auto& br : branches) {
    ComplexPoly2 A = wh;
    for (auto [n, v] : br.coeffs) A -= w.pow(n) * v;
    phis.push_back(modulus_squared(A));
  }
  FamilySpec f;
  f.provenance = "smooth-conjugate";
  f.at = [phis](double t) {
    RealPoly2 F(1.0);
    for (const auto& phi : phis) F = F * (phi - RealPoly2(t * t));
    return F;
  };
  const auto [ex, ey] = ellipse_extent(alpha, beta);
  f.frame = [=](double t) {
    const double grow = 1 + spread * t;
    return Frame{0, 0, t * ex * grow, t * ey * grow};
  };
  f.expected_nodes = expected;
  f.expected_boundary = 0;
  f.multiplicity = 2 * static_cast<int>(branches.size());
  f.tangents = {{alpha, beta}};
  f.t_max = std::min(0.5, 0.5 / std::max(spread, 1e-9));
  // crossing angles shrink like t^(contact-1)
  f.default_t = std::min({0.3, 0.8 * f.t_max, std::pow(0.15 / std::max(spread, 1e-9), 1.0 / (contact - 1))});
  f.window = 1.3;
  return f;
}

ChebyshevLike chebyshev_like(int p, double c) {
  if (p < 2) throw ValidationError("chebyshev_like: degree must be at least 2");
  if (!(c > 0) || !std::isfinite(c)) throw ValidationError("chebyshev_like: c must be positive");
  // T_p by the three-term recurrence
  std::vector<double> t0{1}, t1{0, 1};
  for (int k = 1; k < p; ++k) {
    std::vector<double> t2(k + 2, 0);
    for (int j = 0; j <= k; ++j) t2[j + 1] += 2 * t1[j];
    for (std::size_t j = 0; j < t0.size(); ++j) t2[j] -= t0[j];
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // P(l) = 2^{1-p} alpha^p T_p(l / alpha), alpha = 2 c^{1/p}
  const double alpha = 2 * std::pow(c, 1.0 / p);
  ChebyshevLike out;
  out.coeffs.resize(p + 1);
  for (int k = 0; k <= p; ++k) out.coeffs[k] = std::ldexp(t1[k], 1 - p) * std::pow(alpha, p - k);
  out.coeffs[p] = 1.0;
  out.coeffs[p - 1] = 0.0;
  const auto d1 = poly_derivative(out.coeffs);
  const auto d2 = poly_derivative(d1);
  for (int j = p - 1; j >= 1; --j) {
    double mu = alpha * std::cos(j * kPi / p);
    for (int it = 0; it < 8; ++it) {
      const double step = poly_eval(d1, mu) / poly_eval(d2, mu);
      mu -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(mu))) break;
    }
    out.critical_points.push_back(mu);
  }
  for (std::size_t i = 0; i < out.critical_points.size(); ++i) {
    const double v = poly_eval(out.coeffs, out.critical_points[i]);
    out.critical_values.push_back(v);
    const double target = ((p - 1 - static_cast<int>(i)) % 2 == 1 ? -2 : 2) * c;
    if (std::abs(v - target) > 1e-10 * std::max(1.0, c))
      throw NumericError("chebyshev_like: critical value " + std::to_string(v) + " misses " + std::to_string(target));
  }
  return out;
}

PairCoefficients solve_pair_coefficients(int p, int q, double abs_a, double tau) {
  if (!(tau >= 0)) throw ValidationError("pair coefficients: tau must be nonnegative");
  const auto cheb = chebyshev_like(p, abs_a);
  const double k = (p + q) / 2.0;
  std::vector<double> b(cheb.coeffs.begin(), cheb.coeffs.begin() + (p - 1));
  std::vector<double> mu = cheb.critical_points;
  std::vector<double> target(p - 1);
  for (int i = 0; i < p - 1; ++i) target[i] = ((p - 1 - i) % 2 == 1 ? -2 : 2) * abs_a;

  auto Q = [&](const std::vector<double>& bb) {
    std::vector<double> c = bb;
    c.push_back(0);
    c.push_back(1);
    return c;
  };
  PairCoefficients out;
  const int steps = tau == 0 ? 1 : 40;
  for (int stage = 1; stage <= steps; ++stage) {
    const double tk = tau * stage / steps;
    double res = 0;
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      const auto qc = Q(b);
      const auto dq = poly_derivative(qc);
      const auto ddq = poly_derivative(dq);
      // critical points: roots of (1 + tk s) Q'(s) - k tk Q(s)
      for (int i = 0; i < p - 1; ++i) {
        for (int inner = 0; inner < 30; ++inner) {
          const double s = mu[i];
          const double g = (1 + tk * s) * poly_eval(dq, s) - k * tk * poly_eval(qc, s);
          const double dg = tk * poly_eval(dq, s) + (1 + tk * s) * poly_eval(ddq, s) - k * tk * poly_eval(dq, s);
          const double step = g / dg;
          mu[i] -= step;
          if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(mu[i]))) break;
        }
        if (!(1 + tk * mu[i] > 0)) throw NumericError("pair coefficients: critical point left the annulus");
      }
      for (int i = 1; i < p - 1; ++i)
        if (!(mu[i] > mu[i - 1])) throw NumericError("pair coefficients: critical points merged");
      std::vector<double> r(p - 1);
      std::vector<std::vector<double>> J(p - 1, std::vector<double>(p - 1));
      res = 0;
      for (int i = 0; i < p - 1; ++i) {
        const double damp = std::pow(1 + tk * mu[i], -k);
        r[i] = damp * poly_eval(qc, mu[i]) - target[i];
        res = std::max(res, std::abs(r[i]));
        for (int j = 0; j < p - 1; ++j) J[i][j] = damp * std::pow(mu[i], j);
      }
      if (res < 1e-13 * std::max(1.0, abs_a)) {
        converged = true;
        break;
      }
      const auto delta = solve_dense(J, r);
      for (int j = 0; j < p - 1; ++j) b[j] -= delta[j];
    }
    if (!converged) throw NumericError("pair coefficients: Newton iteration did not converge at tau = " + std::to_string(tk));
    out.residual = res;
  }
  out.tau = tau;
  out.b = b;
  out.critical_points = mu;
  return out;
}

RealPoly2 one_pair_germ(int p, int q, std::complex<double> a, double alpha, double beta) {
  const auto w = tangent_coordinate(alpha, beta, false);
  const RealPoly2 rho2 = modulus_squared(w);
  const RealPoly2 tail = real_part(w.pow(p + q) * std::conj(a)) * 2.0;
  return rho2.pow(p) - tail;
}

FamilySpec family_one_puiseux_pair(int p, int q, std::complex<double> a, double alpha, double beta) {
  if (p < 2 || q <= p) throw ValidationError("one-pair family: need 2 <= p < q");
  if (std::gcd(p, q) != 1)
    throw ValidationError("one-pair family: p=" + std::to_string(p) + " and q=" + std::to_string(q) + " are not coprime");
  if (std::abs(a) == 0) throw ValidationError("one-pair family: a must be nonzero");
  check_tangent(beta);
  const double abs_a = std::abs(a);
  const auto w = tangent_coordinate(alpha, beta, false);
  const RealPoly2 rho2 = modulus_squared(w);
  // -a w^^N - conj(a) w^N = -2 Re(conj(a) w^N) on real points
  const RealPoly2 tail = real_part(w.pow(p + q) * std::conj(a)) * 2.0;
  const double lead = static_cast<double>(q - p) / p;

  FamilySpec f;
  f.provenance = "one-pair";
  f.at = [=](double t) {
    const double tau = std::pow(t, lead);
    const auto coeffs = solve_pair_coefficients(p, q, abs_a, tau);
    const RealPoly2 U = rho2 - RealPoly2(t * t);
    RealPoly2 F = U.pow(p);
    RealPoly2 Ui(1.0);
    for (int i = 0; i <= p - 2; ++i) {
      F += Ui * (std::pow(t, static_cast<double>((p - i) * (p + q)) / p) * coeffs.b[i]);
      Ui = Ui * U;
    }
    return F - tail;
  };
  const auto [ex, ey] = ellipse_extent(alpha, beta);
  // the curve stays where |sigma| <= 2|a|^{1/p}, i.e. rho^2 <= t^2 (1 + tau 2|a|^{1/p})
  const double reach = 2.2 * std::pow(abs_a, 1.0 / p);
  f.frame = [=](double t) {
    const double grow = std::sqrt(1 + std::pow(t, lead) * reach);
    return Frame{0, 0, t * ex * grow, t * ey * grow};
  };
  f.expected_nodes = (p - 1) * (p + q);
  f.expected_boundary = 0;
  f.multiplicity = 2 * p;
  f.tangents = {{alpha, beta}};
  // far components sit near rho = (2|a|)^{-1/(q-p)}
  const double far = std::pow(2 * abs_a, -1.0 / (q - p)) / std::max(ex, ey);
  f.default_t = std::min(std::pow(0.1, 1 / lead), 0.25 * far);
  f.t_max = 0.5 * far;
  f.window = 1.35;
  return f;
}

FamilySpec family_semiquasi_pp(const std::vector<LinearForm>& lines, const std::vector<QuadraticForm>& quadrics,
                               const std::vector<double>& b, std::vector<double> shifts) {
  const int L = static_cast<int>(lines.size()), k = static_cast<int>(quadrics.size());
  if (L + k == 0) throw ValidationError("semiquasihomogeneous family: no factors");
  if (static_cast<int>(b.size()) != k) throw ValidationError("semiquasihomogeneous family: need one b per quadric");
  for (int i = 0; i < k; ++i) {
    const auto& q = quadrics[i];
    if (!(q.A > 0) || !(4 * q.A * q.C - q.B * q.B > 0))
      throw ValidationError("semiquasihomogeneous family: quadric " + std::to_string(i) + " is not positive definite");
    if (!(b[i] > 0)) throw ValidationError("semiquasihomogeneous family: b must be positive");
    for (int j = 0; j < i; ++j) {
      const auto& o = quadrics[j];
      const double s = q.A / o.A;
      if (std::abs(q.B - s * o.B) < 1e-12 * s && std::abs(q.C - s * o.C) < 1e-12 * s)
        throw ValidationError("semiquasihomogeneous family: quadrics " + std::to_string(j) + " and " +
                              std::to_string(i) + " are proportional");
    }
  }
  for (int i = 0; i < L; ++i) {
    if (std::hypot(lines[i].a, lines[i].b) == 0) throw ValidationError("semiquasihomogeneous family: zero linear form");
    for (int j = 0; j < i; ++j)
      if (std::abs(lines[i].a * lines[j].b - lines[i].b * lines[j].a) <
          1e-12 * std::hypot(lines[i].a, lines[i].b) * std::hypot(lines[j].a, lines[j].b))
        throw ValidationError("semiquasihomogeneous family: lines " + std::to_string(j) + " and " +
                              std::to_string(i) + " are proportional");
  }
  check_quadrics(quadrics, b, "semiquasihomogeneous family");

  double r_min = 1, r_max = 1;
  if (k > 0) {
    r_min = 1e300;
    r_max = 0;
    for (int i = 0; i < k; ++i) {
      r_min = std::min(r_min, std::sqrt(b[i] / form_lambda_max(quadrics[i])));
      r_max = std::max(r_max, std::sqrt(b[i] / form_lambda_min(quadrics[i])));
    }
  }
  if (shifts.empty())
    for (int j = 0; j < L; ++j) shifts.push_back(r_min * 0.5 * (j + 1) / (L + 1) * (j % 2 == 0 ? 1 : -1));
  if (static_cast<int>(shifts.size()) != L) throw ValidationError("semiquasihomogeneous family: need one shift per line");
  // the lines' mutual intersections must fit in the viewport
  double reach = r_max;
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < i; ++j) {
      const double ni = std::hypot(lines[i].a, lines[i].b), nj = std::hypot(lines[j].a, lines[j].b);
      const double det = lines[i].a * lines[j].b - lines[i].b * lines[j].a;
      const double x = (shifts[i] * ni * lines[j].b - shifts[j] * nj * lines[i].b) / det;
      const double y = (lines[i].a * shifts[j] * nj - lines[j].a * shifts[i] * ni) / det;
      reach = std::max(reach, 1.3 * std::hypot(x, y));
    }

  FamilySpec f;
  f.provenance = "semiquasi";
  f.at = [=](double t) {
    RealPoly2 F(1.0);
    const double st = std::sqrt(t);
    for (int j = 0; j < L; ++j) {
      const double n = std::hypot(lines[j].a, lines[j].b);
      F = F * (RealPoly2::x() * (lines[j].a / n) + RealPoly2::y() * (lines[j].b / n) - RealPoly2(shifts[j] * st));
    }
    for (int i = 0; i < k; ++i) {
      const auto& q = quadrics[i];
      RealPoly2 Q;
      Q.set(2, 0, q.A);
      Q.set(1, 1, q.B);
      Q.set(0, 2, q.C);
      Q.set(0, 0, -b[i] * t);
      F = F * Q;
    }
    return F;
  };
  f.frame = [=](double t) { return Frame{0, 0, std::sqrt(t) * reach, std::sqrt(t) * reach}; };
  f.expected_nodes = L * (L - 1) / 2 + 2 * L * k + 2 * k * (k - 1);
  f.expected_boundary = 2 * L;
  f.multiplicity = L + 2 * k;
  f.default_t = 1.0;
  f.t_max = 1e6;
  f.window = 1.3;
  return f;
}

FamilySpec family_ellipse_composition(const std::vector<FamilySpec>& parts, const std::vector<double>& gamma) {
  if (parts.empty()) throw ValidationError("ellipse composition: no parts");
  if (gamma.size() != parts.size()) throw ValidationError("ellipse composition: need one gamma per part");
  if (parts.size() == 1 && gamma[0] == 1.0) return parts[0];
  std::vector<QuadraticForm> ellipses;
  int expected = 0;
  bool all_expected = true;
  std::optional<int> boundary = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(gamma[i] > 0)) throw ValidationError("ellipse composition: gamma must be positive");
    if (parts[i].tangents.size() != 1)
      throw ValidationError("ellipse composition: part " + std::to_string(i) + " must have one pair of tangents");
    const auto [al, be] = parts[i].tangents[0];
    for (std::size_t j = 0; j < i; ++j) {
      const auto [al2, be2] = parts[j].tangents[0];
      if (std::abs(al - al2) < 1e-12 && std::abs(std::abs(be) - std::abs(be2)) < 1e-12)
        throw ValidationError("ellipse composition: parts " + std::to_string(j) + " and " + std::to_string(i) +
                              " share their tangent pair");
    }
    ellipses.push_back(tangent_ellipse(al, be));
    if (parts[i].expected_nodes) {
      expected += *parts[i].expected_nodes;
    } else {
      all_expected = false;
    }
    if (boundary && parts[i].expected_boundary) {
      *boundary += *parts[i].expected_boundary;
    } else {
      boundary.reset();
    }
    for (std::size_t j = 0; j < i; ++j) expected += parts[i].multiplicity * parts[j].multiplicity;
  }
  check_quadrics(ellipses, gamma, "ellipse composition");

  FamilySpec f;
  f.provenance = "composition";
  f.at = [=](double t) {
    RealPoly2 F(1.0);
    for (std::size_t i = 0; i < parts.size(); ++i) F = F * parts[i].at(t * std::sqrt(gamma[i]));
    return F;
  };
  f.frame = [=](double t) {
    double xr = 0, yr = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto fr = parts[i].frame(t * std::sqrt(gamma[i]));
      xr = std::max(xr, std::abs(fr.cx) + fr.sx * parts[i].window);
      yr = std::max(yr, std::abs(fr.cy) + fr.sy * parts[i].window);
    }
    return Frame{0, 0, xr, yr};
  };
  if (all_expected) f.expected_nodes = expected;
  f.expected_boundary = boundary;
  for (const auto& p : parts) {
    f.multiplicity += p.multiplicity;
    f.tangents.insert(f.tangents.end(), p.tangents.begin(), p.tangents.end());
  }
  double t_def = 1e300, t_max = 1e300;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    t_def = std::min(t_def, parts[i].default_t / std::sqrt(gamma[i]));
    t_max = std::min(t_max, parts[i].t_max / std::sqrt(gamma[i]));
  }
  f.default_t = t_def;
  f.t_max = t_max;
  f.window = 1.1;
  return f;
}

FamilySpec family_demo_l16(int n) {
  if (n < 2) throw ValidationError("demo family: n must be at least 2");
  FamilySpec f;
  f.provenance = "l16";
  f.at = [n](double t) {
    RealPoly2 prod(1.0);
    for (int k = 1; k <= n; ++k) prod = prod * (RealPoly2::x() - RealPoly2(k * t));
    RealPoly2 top = RealPoly2::y() - RealPoly2::x() * RealPoly2::x() * t;
    return top * top - prod * prod;
  };
  f.frame = [n](double t) {
    const double cx = (n + 1) * t / 2, sx = (n + 1) * t / 2;
    // vertical extent of both graphs over the viewport's x-range
    double lo = 1e300, hi = -1e300;
    for (int s = 0; s <= 400; ++s) {
      const double x = cx + sx * 1.2 * (2.0 * s / 400 - 1);
      double prod = 1;
      for (int k = 1; k <= n; ++k) prod *= x - k * t;
      for (double sg : {1.0, -1.0}) {
        const double y = t * x * x + sg * prod;
        lo = std::min(lo, y);
        hi = std::max(hi, y);
      }
    }
    const double half = std::max((hi - lo) / 2, 1e-3 * sx);
    return Frame{cx, (hi + lo) / 2, sx, 0.8 * half};
  };
  f.expected_nodes = n;
  f.expected_boundary = 4;
  f.multiplicity = 2;
  f.default_t = 0.5;
  f.t_max = 1.0;
  f.window = 1.0;
  return f;
}

FamilySpec family_from_polynomial(const RealPoly2& p, double half_width) {
  if (!(half_width > 0)) throw ValidationError("polynomial family: half-width must be positive");
  FamilySpec f;
  f.provenance = "polynomial";
  f.at = [p](double) { return p; };
  f.frame = [half_width](double) { return Frame{0, 0, half_width, half_width}; };
  f.default_t = 1.0;
  f.t_max = 1e300;
  f.window = 1.0;
  return f;
}

}  // namespace rsing
