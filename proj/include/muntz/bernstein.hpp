#pragma once

#include "muntz/blossom.hpp"
#include "muntz/polynomial.hpp"

#include <vector>

namespace muntz {

/// Normalized Chebyshev-Bernstein basis of E_lambda(n) over [a, b].
struct BernsteinBasis {
  MuntzSpace space;
  Rational a;
  Rational b;
  std::vector<SparsePolynomial> elements;

  /// Element k, or zero outside 0..n.
  SparsePolynomial operator[](int k) const;
};

/// Throws Error(DegenerateInterval) or Error(NonPositiveEndpoint).
void check_interval(const Partition& lambda, const Rational& a, const Rational& b);

SparsePolynomial classical_bernstein(int n, int k, const Rational& a, const Rational& b);

BernsteinBasis bernstein_basis(const MuntzSpace& space, const Rational& a, const Rational& b);

/// Same basis, built downwards from the classical basis of order n + lambda_1
/// through repeated border complements.
BernsteinBasis bernstein_via_descent(const MuntzSpace& space, const Rational& a, const Rational& b);

/// Basis of E_lambda(n) from the basis of a dimension elevation E_eta(n+1).
BernsteinBasis descend(const BernsteinBasis& upper, const Partition& lambda);

struct EndpointDerivatives {
  Rational at_a; ///< k-th derivative of element k at a
  Rational at_b; ///< (n-k)-th derivative of element k at b
};

EndpointDerivatives endpoint_derivatives(const MuntzSpace& space, const Rational& a,
                                         const Rational& b, int k);

/// f_lambda(n+1) f_{eta^(0)}(n+1) / (f_{lambda^(0)}(n) f_eta(n+2)).
Rational elevation_binomial(const Partition& eta, const Partition& lambda, int n);

struct ElevationFactors {
  Rational gamma;
  Rational delta;
  Rational binom;
};

/// Throws Error(NotAnElevation) unless E_lambda(n) lies in E_eta(n+1).
ElevationFactors elevation_factors(const Partition& lambda, const Partition& eta, int n,
                                   const Rational& a, const Rational& b, int k);

/// R_lambda(k, n); lambda needs at least the first two rows equal in use.
Rational r_factor(const Partition& lambda, int n, const Rational& a, const Rational& b, int k);

/// d/dt B_k = left B_{k-1} - right B_k in the basis of E_{lambda^(0)}(n-1).
struct EqualRowsDerivative {
  Rational left;
  Rational right;
};

/// Throws Error(FirstTwoPartsUnequal).
EqualRowsDerivative derivative_basis_equal(const MuntzSpace& space, const Rational& a,
                                           const Rational& b, int k);

/// d/dt B_k = scale (g1 B_{k-1} + g2 B_k + g3 B_{k+1}) in the basis of
/// E_mu(n), mu = (lambda_1 - 1, lambda_2, ...).
struct GeneralDerivative {
  Rational scale;
  Rational g1;
  Rational g2;
  Rational g3;
};

/// Throws Error(FirstTwoPartsEqual).
GeneralDerivative derivative_basis_general(const MuntzSpace& space, const Rational& a,
                                           const Rational& b, int k);

/// (lambda_1 - 1, lambda_2, ..., lambda_n)
Partition derivative_partition(const Partition& lambda);

} // namespace muntz
