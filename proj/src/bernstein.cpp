#include "muntz/bernstein.hpp"

#include "muntz/error.hpp"

namespace muntz {

namespace {

ArgMultiset ab(const Rational& a, int na, const Rational& b, int nb) {
  return ArgMultiset{{a, na}, {b, nb}};
}

Rational s(const Partition& p, const Rational& a, int na, const Rational& b, int nb) {
  return schur(p, ab(a, na, b, nb));
}

Rational f(const Partition& p, int n) { return Rational(ssyt_count(p, n)); }

// f_lambda(n+1) / f_{lambda^(0)}(n), also for the empty partition
Rational first_row_ratio(const Partition& p, int n) {
  return p.empty() ? Rational(1) : hook_ratio_first_row(p, n);
}

void check_index(int k, int n) {
  if (k < 0 || k > n)
    fail(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(k) + " outside 0.." +
                                         std::to_string(n));
}

// Gamma and Delta without the elevation check.
std::pair<Rational, Rational> gamma_delta(const Partition& lambda, const Partition& eta, int n,
                                          const Rational& a, const Rational& b, int k) {
  const Partition l0 = bottom_partition(lambda), e0 = bottom_partition(eta);
  const Rational s0 = s(l0, a, n - k, b, k);
  Rational gamma = s0 * s(eta, a, n + 2 - k, b, k) /
                   (s(lambda, a, n + 1 - k, b, k) * s(e0, a, n + 1 - k, b, k));
  Rational delta = s0 * s(eta, a, n - k, b, k + 2) /
                   (s(lambda, a, n - k, b, k + 1) * s(e0, a, n - k, b, k + 1));
  return {gamma, delta};
}

} // namespace

SparsePolynomial BernsteinBasis::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(elements.size()))
    return {};
  return elements[k];
}

void check_interval(const Partition& lambda, const Rational& a, const Rational& b) {
  if (a >= b)
    fail(ErrorCode::DegenerateInterval,
         "interval [" + to_string(a) + ", " + to_string(b) + "] needs a < b");
  if (!lambda.empty() && a <= 0)
    fail(ErrorCode::NonPositiveEndpoint,
         "left endpoint must be positive for partition " + to_string(lambda));
}

SparsePolynomial classical_bernstein(int n, int k, const Rational& a, const Rational& b) {
  if (k < 0 || k > n)
    return {};
  SparsePolynomial up = SparsePolynomial::monomial(1, 1) - SparsePolynomial(a);
  SparsePolynomial down = SparsePolynomial(b) - SparsePolynomial::monomial(1, 1);
  return (Rational(binomial(n, k)) / pow(b - a, n)) * (pow(up, k) * pow(down, n - k));
}

BernsteinBasis bernstein_basis(const MuntzSpace& space, const Rational& a, const Rational& b) {
  const Partition& lam = space.lambda();
  check_interval(lam, a, b);
  const int n = space.n();
  const Rational ratio = first_row_ratio(lam, n);
  const Rational ab_prod = a * b;
  BernsteinBasis out{space, a, b, {}};
  for (int k = 0; k <= n; ++k) {
    SymmetricEvaluator ev(ab(a, n - k, b, k), lam[1] + lam.length() + 1);
    SparsePolynomial sum;
    for (int j = 0; j <= lam[1]; ++j)
      sum += SparsePolynomial::monomial(pow(ab_prod, j) * ev.skew_schur(lam, Partition{j}),
                                        lam[1] - j);
    Rational c = ratio * ev.schur(space.bottom()) /
                 (s(lam, a, n + 1 - k, b, k) * s(lam, a, n - k, b, k + 1));
    out.elements.push_back(c * (classical_bernstein(n, k, a, b) * sum));
  }
  return out;
}

BernsteinBasis descend(const BernsteinBasis& upper, const Partition& lambda) {
  const int n = upper.space.n() - 1;
  const Partition& eta = upper.space.lambda();
  if (!is_dimension_elevation(lambda, n, eta))
    fail(ErrorCode::NotAnElevation, to_string(eta) + " is not a dimension elevation of " +
                                        to_string(lambda));
  const Rational &a = upper.a, &b = upper.b;
  check_interval(lambda, a, b);
  const Rational binom = elevation_binomial(eta, lambda, n);
  const int rho = lambda[1] - eta[1];
  BernsteinBasis out{MuntzSpace(lambda, n), a, b, {}};
  for (int k = 0; k <= n; ++k) {
    auto [gamma, delta] = gamma_delta(lambda, eta, n, a, b, k);
    Rational xi = frac(n + 1 - k, n + 1) * binom * pow(a, rho) * gamma;
    Rational r = frac(k + 1, n + 1) * binom * pow(b, rho) * delta;
    out.elements.push_back(xi * upper[k] + r * upper[k + 1]);
  }
  return out;
}

BernsteinBasis bernstein_via_descent(const MuntzSpace& space, const Rational& a,
                                     const Rational& b) {
  check_interval(space.lambda(), a, b);
  auto chain = descent_chain(space.lambda(), space.n());
  const int top = chain.back().second;
  BernsteinBasis cur{MuntzSpace(Partition{}, top), a, b, {}};
  for (int k = 0; k <= top; ++k)
    cur.elements.push_back(classical_bernstein(top, k, a, b));

  // each step uses the border-complement specialization (n+1)/h(1,1) of the
  // elevation binomial, with a^1 and b^1
  for (std::size_t idx = chain.size() - 1; idx-- > 0;) {
    const auto& [lam, n] = chain[idx];
    const Partition& eta = chain[idx + 1].first;
    const int hook = hook_and_content(lam, 1, 1).hook;
    BernsteinBasis next{MuntzSpace(lam, n), a, b, {}};
    for (int k = 0; k <= n; ++k) {
      auto [gamma, delta] = gamma_delta(lam, eta, n, a, b, k);
      next.elements.push_back(frac(n + 1 - k, hook) * a * gamma * cur[k] +
                              frac(k + 1, hook) * b * delta * cur[k + 1]);
    }
    cur = std::move(next);
  }
  return cur;
}

EndpointDerivatives endpoint_derivatives(const MuntzSpace& space, const Rational& a,
                                         const Rational& b, int k) {
  const Partition& lam = space.lambda();
  check_interval(lam, a, b);
  const int n = space.n();
  check_index(k, n);
  const Rational common = first_row_ratio(lam, n) * s(space.bottom(), a, n - k, b, k);
  EndpointDerivatives d;
  d.at_a = Rational(factorial(n) / factorial(n - k)) * pow(a, lam[1]) / pow(b - a, k) * common /
           s(lam, a, n + 1 - k, b, k);
  d.at_b = Rational(factorial(n) / factorial(k)) * pow(b, lam[1]) / pow(b - a, n - k) * common /
           s(lam, a, n - k, b, k + 1);
  if ((n - k) % 2)
    d.at_b = -d.at_b;
  return d;
}

Rational elevation_binomial(const Partition& eta, const Partition& lambda, int n) {
  return f(lambda, n + 1) * f(bottom_partition(eta), n + 1) /
         (f(bottom_partition(lambda), n) * f(eta, n + 2));
}

ElevationFactors elevation_factors(const Partition& lambda, const Partition& eta, int n,
                                   const Rational& a, const Rational& b, int k) {
  if (!is_dimension_elevation(lambda, n, eta))
    fail(ErrorCode::NotAnElevation, to_string(eta) + " is not a dimension elevation of " +
                                        to_string(lambda));
  check_interval(eta.empty() ? lambda : eta, a, b);
  check_interval(lambda, a, b);
  check_index(k, n);
  auto [gamma, delta] = gamma_delta(lambda, eta, n, a, b, k);
  return {gamma, delta, elevation_binomial(eta, lambda, n)};
}

Rational r_factor(const Partition& lambda, int n, const Rational& a, const Rational& b, int k) {
  const Partition l0 = bottom_partition(lambda);
  const Partition eta = bottom_partition(l0);
  return s(l0, a, n - k - 1, b, k + 1) * s(l0, a, n - k, b, k) /
         (s(lambda, a, n - k, b, k + 1) * s(eta, a, n - k - 1, b, k));
}

EqualRowsDerivative derivative_basis_equal(const MuntzSpace& space, const Rational& a,
                                           const Rational& b, int k) {
  const Partition& lam = space.lambda();
  if (lam[1] != lam[2])
    fail(ErrorCode::FirstTwoPartsUnequal, "first two parts of " + to_string(lam) + " differ");
  check_interval(lam, a, b);
  const int n = space.n();
  check_index(k, n);
  const Partition l0 = bottom_partition(lam);
  const Rational scale = Rational(n) / (b - a) * f(lam, n + 1) *
                         f(bottom_partition(l0), n - 1) / (f(l0, n) * f(l0, n));
  EqualRowsDerivative d;
  if (k >= 1)
    d.left = scale * r_factor(lam, n, a, b, k - 1);
  if (k <= n - 1)
    d.right = scale * r_factor(lam, n, a, b, k);
  return d;
}

Partition derivative_partition(const Partition& lambda) {
  std::vector<int> v = lambda.parts();
  if (!v.empty())
    --v[0];
  return Partition(std::move(v));
}

GeneralDerivative derivative_basis_general(const MuntzSpace& space, const Rational& a,
                                           const Rational& b, int k) {
  const Partition& lam = space.lambda();
  if (lam[1] == lam[2])
    fail(ErrorCode::FirstTwoPartsEqual, "first two parts of " + to_string(lam) + " are equal");
  check_interval(lam, a, b);
  const int n = space.n();
  check_index(k, n);
  std::vector<int> ev{lam[1] - 1};
  ev.insert(ev.end(), lam.parts().begin(), lam.parts().end());
  ev[1] = lam[1] - 1;
  const Partition eta(ev);
  const Partition mu = derivative_partition(lam);
  auto [gamma, delta] = gamma_delta(lam, eta, n, a, b, k);

  GeneralDerivative d;
  d.scale = elevation_binomial(eta, lam, n) / ((b - a) * elevation_binomial(eta, mu, n));
  const Rational ga = Rational(n + 1 - k) * a * gamma;
  const Rational db = Rational(k + 1) * b * delta;
  if (k >= 1)
    d.g1 = ga * r_factor(eta, n + 1, a, b, k - 1);
  d.g2 = r_factor(eta, n + 1, a, b, k) * (db - ga);
  if (k + 1 <= n)
    d.g3 = -db * r_factor(eta, n + 1, a, b, k + 1);
  return d;
}

} // namespace muntz
