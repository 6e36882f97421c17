#pragma once

#include "muntz/bernstein.hpp"

#include <utility>
#include <vector>

namespace muntz {

struct MuntzCurve {
  MuntzSpace space;
  Rational a;
  Rational b;
  std::vector<Point> points;
};

/// Validates interval, point count and dimensions.
MuntzCurve make_curve(const Partition& lambda, int n, const Rational& a, const Rational& b,
                      std::vector<Point> points);

int dimension(const MuntzCurve& curve);

/// One polynomial per coordinate.
std::vector<SparsePolynomial> coordinate_polynomials(const MuntzCurve& curve);

Point curve_eval(const MuntzCurve& curve, const Rational& t);

struct ElevationWeights {
  std::vector<Rational> xi;  ///< xi(n, k), k = 0..n
  std::vector<Rational> rho; ///< rho(n, k), k = 0..n
};

/// Throws Error(NotAnElevation).
ElevationWeights elevation_weights(const MuntzCurve& curve, const Partition& eta);
MuntzCurve elevate(const MuntzCurve& curve, const Partition& eta);

/// Hodograph from the derivative recurrences.
Point curve_derivative(const MuntzCurve& curve, const Rational& t);

/// P'(a) = at_a (P1 - P0), P'(b) = at_b (Pn - Pn-1).
struct TangentFactors {
  Rational at_a;
  Rational at_b;
};
TangentFactors tangent_factors(const MuntzSpace& space, const Rational& a, const Rational& b);

/// Solves for c so that a classical right piece on [b, c] with
/// Q1 - Q0 = (Pn - Pn-1) / rho joins with C1 continuity.
Rational join_c_for_rho(const MuntzCurve& left, const Rational& rho);

/// Closed form of the above for left partitions (1^k).
Rational join_c_elementary(const MuntzCurve& left, const Rational& rho);

/// Q1 for a right piece in E_mu(n) on [b, c] with Q0 = Pn.
Point join_q1_for_c(const MuntzCurve& left, const Partition& mu, const Rational& c);

struct TensorSurface {
  MuntzSpace space_t; ///< lambda, parameter t on [a, b]
  MuntzSpace space_s; ///< mu, parameter s on [c, d]
  Rational a, b, c, d;
  std::vector<std::vector<Point>> grid; ///< grid[i][j] pairs B_i(t) with B_j(s)
};

TensorSurface make_surface(const Partition& lambda, const Partition& mu, int n,
                           const Rational& a, const Rational& b, const Rational& c,
                           const Rational& d, std::vector<std::vector<Point>> grid);

Point surface_eval(const TensorSurface& surface, const Rational& s, const Rational& t);

/// m >= 2 uniformly spaced parameters from lo to hi, both included.
std::vector<Rational> uniform_grid(const Rational& lo, const Rational& hi, int m);

std::vector<std::pair<Rational, Point>> sample_curve(const MuntzCurve& curve, int m);

struct SurfaceSample {
  Rational s;
  Rational t;
  Point point;
};
/// Row-major over t, then s.
std::vector<SurfaceSample> sample_surface(const TensorSurface& surface, int m);

} // namespace muntz
