#include "muntz/geometry.hpp"

#include "muntz/error.hpp"

namespace muntz {

namespace {

void check_points(const std::vector<Point>& points, std::size_t count) {
  if (points.size() != count)
    fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(count) +
                                           " control points, got " +
                                           std::to_string(points.size()));
  for (const auto& p : points)
    if (p.size() != points[0].size())
      fail(ErrorCode::DimensionMismatch, "control points of different dimension");
}

Point zero_point(std::size_t d) { return Point(d, Rational(0)); }

// Basis values at t, allowing order 0 (the constant 1).
std::vector<Rational> basis_values(const Partition& lambda, int n, const Rational& a,
                                   const Rational& b, const Rational& t) {
  if (n == 0)
    return {Rational(1)};
  auto basis = bernstein_basis(MuntzSpace(lambda, n), a, b);
  std::vector<Rational> v;
  for (const auto& e : basis.elements)
    v.push_back(e(t));
  return v;
}

} // namespace

MuntzCurve make_curve(const Partition& lambda, int n, const Rational& a, const Rational& b,
                      std::vector<Point> points) {
  MuntzSpace space(lambda, n);
  check_interval(lambda, a, b);
  check_points(points, n + 1);
  return {std::move(space), a, b, std::move(points)};
}

int dimension(const MuntzCurve& curve) {
  return curve.points.empty() ? 0 : static_cast<int>(curve.points[0].size());
}

std::vector<SparsePolynomial> coordinate_polynomials(const MuntzCurve& curve) {
  auto basis = bernstein_basis(curve.space, curve.a, curve.b);
  std::vector<SparsePolynomial> out(dimension(curve));
  for (std::size_t k = 0; k < curve.points.size(); ++k)
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += curve.points[k][i] * basis.elements[k];
  return out;
}

Point curve_eval(const MuntzCurve& curve, const Rational& t) {
  curve.space.check_argument(t);
  Point p;
  for (const auto& poly : coordinate_polynomials(curve))
    p.push_back(poly(t));
  return p;
}

ElevationWeights elevation_weights(const MuntzCurve& curve, const Partition& eta) {
  const Partition& lam = curve.space.lambda();
  const int n = curve.space.n();
  const int rho_exp = lam[1] - eta[1];
  ElevationWeights w;
  for (int k = 0; k <= n; ++k) {
    auto f = elevation_factors(lam, eta, n, curve.a, curve.b, k);
    w.xi.push_back(frac(n + 1 - k, n + 1) * pow(curve.a, rho_exp) * f.binom * f.gamma);
    w.rho.push_back(frac(k + 1, n + 1) * pow(curve.b, rho_exp) * f.binom * f.delta);
  }
  return w;
}

MuntzCurve elevate(const MuntzCurve& curve, const Partition& eta) {
  const int n = curve.space.n();
  ElevationWeights w = elevation_weights(curve, eta);
  const auto& P = curve.points;
  std::vector<Point> Q;
  Q.push_back(P[0]);
  for (int k = 1; k <= n; ++k)
    Q.push_back(w.rho[k - 1] * P[k - 1] + w.xi[k] * P[k]);
  Q.push_back(P[n]);
  return make_curve(eta, n + 1, curve.a, curve.b, std::move(Q));
}

Point curve_derivative(const MuntzCurve& curve, const Rational& t) {
  curve.space.check_argument(t);
  const Partition& lam = curve.space.lambda();
  const int n = curve.space.n();
  const auto& P = curve.points;
  const Rational &a = curve.a, &b = curve.b;
  Point out = zero_point(dimension(curve));

  if (lam[1] == lam[2]) {
    auto B = basis_values(bottom_partition(lam), n - 1, a, b, t);
    for (int k = 0; k < n; ++k) {
      Rational c = derivative_basis_equal(curve.space, a, b, k).right;
      out = out + (c * B[k]) * (P[k + 1] - P[k]);
    }
    return out;
  }

  auto B = basis_values(derivative_partition(lam), n, a, b, t);
  std::vector<GeneralDerivative> G;
  for (int k = 0; k <= n; ++k)
    G.push_back(derivative_basis_general(curve.space, a, b, k));
  for (int j = 0; j <= n; ++j) {
    Point coeff = G[j].g2 * P[j];
    if (j >= 1)
      coeff = coeff + G[j - 1].g3 * P[j - 1];
    if (j + 1 <= n)
      coeff = coeff + G[j + 1].g1 * P[j + 1];
    out = out + (G[0].scale * B[j]) * coeff;
  }
  return out;
}

TangentFactors tangent_factors(const MuntzSpace& space, const Rational& a, const Rational& b) {
  const Partition& lam = space.lambda();
  check_interval(lam, a, b);
  const int n = space.n();
  const Rational ratio = lam.empty() ? Rational(1) : hook_ratio_first_row(lam, n);
  const Rational base = Rational(n) / (b - a) * ratio;
  const Partition& bot = space.bottom();
  TangentFactors f;
  f.at_a = base * pow(a, lam[1]) * schur(bot, ArgMultiset{{a, n - 1}, {b, 1}}) /
           schur(lam, ArgMultiset{{a, n}, {b, 1}});
  f.at_b = base * pow(b, lam[1]) * schur(bot, ArgMultiset{{a, 1}, {b, n - 1}}) /
           schur(lam, ArgMultiset{{a, 1}, {b, n}});
  return f;
}

namespace {

void check_direction(const MuntzCurve& left) {
  const int n = left.space.n();
  if (left.points[n] == left.points[n - 1])
    fail(ErrorCode::DegenerateDirection, "last two control points coincide");
}

} // namespace

Rational join_c_for_rho(const MuntzCurve& left, const Rational& rho) {
  check_direction(left);
  if (rho <= 0)
    fail(ErrorCode::InvalidInput, "rho must be positive");
  // right factor of a classical piece on [b, c] is n / (c - b)
  const Rational fb = tangent_factors(left.space, left.a, left.b).at_b;
  return left.b + Rational(left.space.n()) / (rho * fb);
}

Rational join_c_elementary(const MuntzCurve& left, const Rational& rho) {
  const Partition& lam = left.space.lambda();
  const int k = lam.length();
  if (lam.empty() || lam[1] != 1)
    fail(ErrorCode::InvalidInput, "closed form needs a single-column partition");
  check_direction(left);
  if (rho <= 0)
    fail(ErrorCode::InvalidInput, "rho must be positive");
  const int n = left.space.n();
  const Rational &a = left.a, &b = left.b;
  return b + Rational(k) * (b - a) * elementary(k, ArgMultiset{{a, 1}, {b, n}}) /
                 (Rational(n + 1) * b * rho * elementary(k - 1, ArgMultiset{{a, 1}, {b, n - 1}}));
}

Point join_q1_for_c(const MuntzCurve& left, const Partition& mu, const Rational& c) {
  check_direction(left);
  const int n = left.space.n();
  MuntzSpace right(mu, n);
  check_interval(mu, left.b, c);
  const Rational fb = tangent_factors(left.space, left.a, left.b).at_b;
  const Rational fa = tangent_factors(right, left.b, c).at_a;
  return left.points[n] + (fb / fa) * (left.points[n] - left.points[n - 1]);
}

TensorSurface make_surface(const Partition& lambda, const Partition& mu, int n,
                           const Rational& a, const Rational& b, const Rational& c,
                           const Rational& d, std::vector<std::vector<Point>> grid) {
  MuntzSpace st(lambda, n), ss(mu, n);
  check_interval(lambda, a, b);
  check_interval(mu, c, d);
  if (static_cast<int>(grid.size()) != n + 1)
    fail(ErrorCode::DimensionMismatch, "surface grid needs n+1 rows");
  for (const auto& row : grid) {
    check_points(row, n + 1);
    if (row[0].size() != grid[0][0].size())
      fail(ErrorCode::DimensionMismatch, "surface points of different dimension");
  }
  return {std::move(st), std::move(ss), a, b, c, d, std::move(grid)};
}

Point surface_eval(const TensorSurface& surface, const Rational& s, const Rational& t) {
  surface.space_t.check_argument(t);
  surface.space_s.check_argument(s);
  const int n = surface.space_t.n();
  auto bt = basis_values(surface.space_t.lambda(), n, surface.a, surface.b, t);
  auto bs = basis_values(surface.space_s.lambda(), n, surface.c, surface.d, s);
  Point out = zero_point(surface.grid[0][0].size());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      out = out + (bt[i] * bs[j]) * surface.grid[i][j];
  return out;
}

std::vector<Rational> uniform_grid(const Rational& lo, const Rational& hi, int m) {
  if (m < 2)
    fail(ErrorCode::InvalidInput, "need at least two samples");
  std::vector<Rational> out;
  for (int i = 0; i < m; ++i)
    out.push_back(lo + (hi - lo) * frac(i, m - 1));
  return out;
}

std::vector<std::pair<Rational, Point>> sample_curve(const MuntzCurve& curve, int m) {
  auto polys = coordinate_polynomials(curve);
  std::vector<std::pair<Rational, Point>> out;
  for (const auto& t : uniform_grid(curve.a, curve.b, m)) {
    Point p;
    for (const auto& poly : polys)
      p.push_back(poly(t));
    out.emplace_back(t, std::move(p));
  }
  return out;
}

std::vector<SurfaceSample> sample_surface(const TensorSurface& surface, int m) {
  const int n = surface.space_t.n();
  auto Bt = bernstein_basis(surface.space_t, surface.a, surface.b);
  auto Bs = bernstein_basis(surface.space_s, surface.c, surface.d);
  std::vector<SurfaceSample> out;
  for (const auto& t : uniform_grid(surface.a, surface.b, m))
    for (const auto& s : uniform_grid(surface.c, surface.d, m)) {
      Point p = zero_point(surface.grid[0][0].size());
      for (int i = 0; i <= n; ++i) {
        Rational wt = Bt.elements[i](t);
        for (int j = 0; j <= n; ++j)
          p = p + (wt * Bs.elements[j](s)) * surface.grid[i][j];
      }
      out.push_back({s, t, std::move(p)});
    }
  return out;
}

} // namespace muntz
