#include "muntz/bernstein.hpp"
#include "muntz/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace muntz;

namespace {

using oracle::t_pow;

SparsePolynomial sum_of(const BernsteinBasis& B) {
  SparsePolynomial s;
  for (const auto& e : B.elements)
    s += e;
  return s;
}

int order_at(const SparsePolynomial& p, const Rational& x, int limit) {
  int d = 0;
  while (d <= limit && p.derivative(d)(x) == 0)
    ++d;
  return d;
}

Partition column(int r) { return Partition(std::vector<int>(r, 1)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

} // namespace

TEST_SUITE("bernstein") {

TEST_CASE("sparse polynomial arithmetic") {
  SparsePolynomial p = SparsePolynomial::monomial(3, 4) - t_pow(1) + SparsePolynomial(1);
  CHECK(to_string(p) == "3 t^4 - t + 1");
  CHECK(p(Rational(2)) == 47);
  CHECK(p.derivative() == SparsePolynomial::monomial(12, 3) - SparsePolynomial(1));
  CHECK((p - p).is_zero());
  CHECK(to_string(SparsePolynomial()) == "0");
  CHECK(pow(t_pow(1) + SparsePolynomial(1), 3)(Rational(1)) == 8);
  CHECK(to_string(frac(-1, 2) * t_pow(2)) == "-1/2 t^2");
}

TEST_CASE("polynomial space gives the classical basis") {
  for (int n = 1; n <= 4; ++n) {
    auto B = bernstein_basis(MuntzSpace(Partition{}, n), Rational(0), Rational(1));
    for (int k = 0; k <= n; ++k) {
      SparsePolynomial expect = Rational(binomial(n, k)) * pow(t_pow(1), k) *
                                pow(SparsePolynomial(1) - t_pow(1), n - k);
      CHECK(B.elements[k] == expect);
    }
  }
  auto B = bernstein_basis(MuntzSpace(Partition{}, 2), Rational(-2), Rational(3));
  CHECK(sum_of(B) == SparsePolynomial(1));
}

TEST_CASE("domain errors") {
  MuntzSpace sp(Partition{1}, 2);
  CHECK(code_of([&] { bernstein_basis(sp, Rational(2), Rational(1)); }) ==
        ErrorCode::DegenerateInterval);
  CHECK(code_of([&] { bernstein_basis(sp, Rational(0), Rational(1)); }) ==
        ErrorCode::NonPositiveEndpoint);
  CHECK(code_of([&] { endpoint_derivatives(sp, Rational(1), Rational(2), 3); }) ==
        ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { derivative_basis_equal(sp, Rational(1), Rational(2), 0); }) ==
        ErrorCode::FirstTwoPartsUnequal);
  CHECK(code_of([&] {
          derivative_basis_general(MuntzSpace(Partition{1, 1}, 2), Rational(1), Rational(2), 0);
        }) == ErrorCode::FirstTwoPartsEqual);
  CHECK(code_of([&] {
          elevation_factors(Partition{1}, Partition{2}, 2, Rational(1), Rational(2), 0);
        }) == ErrorCode::NotAnElevation);
}

TEST_CASE("closed form matches the vanishing-order characterization") {
  oracle::Rng rng(31);
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : partitions_up_to(4, n)) {
      MuntzSpace sp(lam, n);
      Rational a = rng.positive(), b = a + rng.positive();
      auto B = bernstein_basis(sp, a, b);
      CHECK(B.elements == oracle::basis_by_vanishing(sp.exponents(), a, b));
      CHECK(sum_of(B) == SparsePolynomial(1));
      for (int k = 0; k <= n; ++k) {
        for (const auto& [e, c] : B.elements[k].terms())
          CHECK((e == 0 || std::find(sp.exponents().begin(), sp.exponents().end(), e) !=
                               sp.exponents().end()));
        CHECK(order_at(B.elements[k], a, n) == k);
        CHECK(order_at(B.elements[k], b, n) == n - k);
        auto d = endpoint_derivatives(sp, a, b, k);
        CHECK(B.elements[k].derivative(k)(a) == d.at_a);
        CHECK(B.elements[k].derivative(n - k)(b) == d.at_b);
        for (int i = 1; i < 6; ++i) {
          Rational t = a + (b - a) * frac(i, 6);
          CHECK(B.elements[k](t) > 0);
          CHECK(B.elements[k](t) == oracle::bernstein_pointwise(lam, n, a, b, t, k));
        }
      }
    }
}

TEST_CASE("descent construction") {
  Rational a(1), b(2);
  MuntzSpace sq(Partition{2, 2}, 3);
  CHECK(bernstein_via_descent(sq, a, b).elements == bernstein_basis(sq, a, b).elements);
  oracle::Rng rng(37);
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : partitions_up_to(5, n)) {
      MuntzSpace sp(lam, n);
      Rational a2 = rng.positive(), b2 = a2 + rng.positive();
      CHECK(bernstein_via_descent(sp, a2, b2).elements == bernstein_basis(sp, a2, b2).elements);
    }
}

TEST_CASE("descending from any elevation") {
  oracle::Rng rng(41);
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : partitions_up_to(3, n))
      for (const auto& eta : dimension_elevation_partitions(lam, n, 1)) {
        Rational a = rng.positive(), b = a + rng.positive();
        auto upper = bernstein_basis(MuntzSpace(eta, n + 1), a, b);
        CHECK(descend(upper, lam).elements == bernstein_basis(MuntzSpace(lam, n), a, b).elements);
      }
}

TEST_CASE("elevation factors") {
  Rational a = frac(1, 2), b(3);
  for (const auto& lam : partitions_up_to(5, 4)) {
    if (lam.empty())
      continue;
    for (int n = lam.length(); n <= 4; ++n) {
      auto f = elevation_factors(lam, border_complement(lam), n, a, b, 0);
      CHECK(f.binom == frac(n + 1, hook_and_content(lam, 1, 1).hook));
    }
  }
  for (int r = 1; r <= 3; ++r)
    CHECK(elevation_factors(column(r), Partition{}, 4, a, b, 1).binom == frac(5, r));
  CHECK_NOTHROW(elevation_factors(Partition{}, Partition{}, 3, a, b, 2));
}

TEST_CASE("elementary, complete, hook and staircase spaces") {
  oracle::Rng rng(43);
  for (int n = 1; n <= 4; ++n) {
    Rational a = rng.positive(), b = a + rng.positive();
    for (int r = 1; r <= std::min(n, 3); ++r) {
      auto B = bernstein_basis(MuntzSpace(Partition(std::vector<int>(r, 1)), n), a, b);
      for (int k = 0; k <= n; ++k)
        CHECK(B.elements[k] == oracle::column_basis(r, n, a, b, k));
    }
    for (int r = 1; r <= 3; ++r) {
      auto B = bernstein_basis(MuntzSpace(Partition{r}, n), a, b);
      for (int k = 0; k <= n; ++k)
        CHECK(B.elements[k] == oracle::row_basis(r, n, a, b, k));
    }
    for (int l = 0; l <= 3; ++l)
      for (int r = 0; r <= std::min(n - 1, 3); ++r) {
        std::vector<int> parts{l + 1};
        parts.insert(parts.end(), r, 1);
        auto B = bernstein_basis(MuntzSpace(Partition(parts), n), a, b);
        for (int k = 0; k <= n; ++k)
          CHECK(B.elements[k] == oracle::hook_basis(l, r, n, a, b, k));
      }
    for (int l = 1; l <= 3; ++l) {
      auto B = bernstein_basis(MuntzSpace(oracle::staircase(l, n), n), a, b);
      for (int k = 0; k <= n; ++k)
        CHECK(B.elements[k] == oracle::staircase_basis(l, n, a, b, k));
    }
  }
}

TEST_CASE("first and last elements from the single-path closed form") {
  oracle::Rng rng(47);
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : partitions_up_to(4, n)) {
      MuntzSpace sp(lam, n);
      const Partition& l0 = sp.bottom();
      Rational a = rng.positive(), b = a + rng.positive();
      auto B = bernstein_basis(sp, a, b);
      for (int i = 0; i <= 4; ++i) {
        Rational t = a + (b - a) * frac(i, 4);
        Rational first = pow((b - t) / (b - a), n) * schur(lam, ArgMultiset{{b, 1}, {t, n}}) *
                         schur(l0, ArgMultiset{{a, n}}) /
                         (schur(lam, ArgMultiset{{b, 1}, {a, n}}) * schur(l0, ArgMultiset{{t, n}}));
        Rational last = pow((t - a) / (b - a), n) * schur(lam, ArgMultiset{{a, 1}, {t, n}}) *
                        schur(l0, ArgMultiset{{b, n}}) /
                        (schur(lam, ArgMultiset{{a, 1}, {b, n}}) * schur(l0, ArgMultiset{{t, n}}));
        CHECK(B.elements[0](t) == first);
        CHECK(B.elements[n](t) == last);
      }
    }
}

TEST_CASE("derivative recurrences") {
  oracle::Rng rng(53);
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : partitions_up_to(5, n)) {
      MuntzSpace sp(lam, n);
      Rational a = rng.positive(), b = a + rng.positive();
      auto B = bernstein_basis(sp, a, b);
      if (lam[1] == lam[2]) {
        if (n < 2)
          continue;
        auto lower = bernstein_basis(MuntzSpace(bottom_partition(lam), n - 1), a, b);
        for (int k = 0; k <= n; ++k) {
          auto d = derivative_basis_equal(sp, a, b, k);
          CHECK(B.elements[k].derivative() == d.left * lower[k - 1] - d.right * lower[k]);
        }
      } else {
        auto lower = bernstein_basis(MuntzSpace(derivative_partition(lam), n), a, b);
        for (int k = 0; k <= n; ++k) {
          auto d = derivative_basis_general(sp, a, b, k);
          CHECK(B.elements[k].derivative() ==
                d.scale * (d.g1 * lower[k - 1] + d.g2 * lower[k] + d.g3 * lower[k + 1]));
        }
      }
    }
  // boundary conventions
  auto d = derivative_basis_equal(MuntzSpace(Partition{2, 2}, 3), Rational(1), Rational(2), 0);
  CHECK(d.left == 0);
  auto g = derivative_basis_general(MuntzSpace(Partition{2, 1}, 3), Rational(1), Rational(2), 0);
  CHECK(g.g1 == 0);
}

} // TEST_SUITE
