#include "muntz/casteljau.hpp"
#include "muntz/bernstein.hpp"
#include "muntz/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace muntz;

namespace {

DeCasteljauPath path_of(std::vector<std::vector<int>> sets) { return DeCasteljauPath{std::move(sets)}; }

bool contains(const std::vector<DeCasteljauPath>& paths, const DeCasteljauPath& p) {
  return std::find(paths.begin(), paths.end(), p) != paths.end();
}

} // namespace

TEST_SUITE("casteljau") {

TEST_CASE("path enumeration") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      auto paths = enumerate_paths(n, k);
      CHECK(BigInt(static_cast<unsigned long>(paths.size())) == binomial(n, k));
      std::set<std::vector<std::vector<int>>> seen;
      for (const auto& p : paths) {
        seen.insert(p.sets);
        REQUIRE(p.sets.size() == static_cast<std::size_t>(n + 1));
        CHECK(p.sets.front() == std::vector<int>{k});
        for (int l = 0; l <= n; ++l) {
          const auto& s = p.sets[l];
          CHECK(s.size() == static_cast<std::size_t>(l + 1));
          CHECK(std::is_sorted(s.begin(), s.end()));
          CHECK(s.back() - s.front() == l);
          if (l > 0)
            CHECK(std::includes(s.begin(), s.end(), p.sets[l - 1].begin(), p.sets[l - 1].end()));
        }
      }
      CHECK(seen.size() == paths.size());
    }
  CHECK(contains(enumerate_paths(3, 1), path_of({{1}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}})));
  CHECK(contains(enumerate_paths(4, 2),
                 path_of({{2}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {0, 1, 2, 3, 4}})));
  CHECK(enumerate_paths(3, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_paths(3, 4), Error);
  CHECK_THROWS_AS(enumerate_paths(20, 10), Error);
}

TEST_CASE("bottom-partition weights telescope") {
  oracle::Rng rng(61);
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_up_to(4, n)) {
      MuntzSpace sp(lam, n);
      Rational a = rng.positive(), b = a + rng.positive();
      Rational t = a + (b - a) * frac(rng.uniform(1, 9), 10);
      for (int k = 0; k <= n; ++k) {
        Rational expect = schur(sp.bottom(), ArgMultiset{{a, n - k}, {b, k}}) /
                          schur(sp.bottom(), ArgMultiset{{t, n}});
        for (const auto& p : enumerate_paths(n, k)) {
          CHECK(path_weight(sp, a, b, t, p, PathWeight::Psi1) == expect);
          // the full edge weight splits into the linear factors and the two Schur parts
          Rational linear = 1;
          for (std::size_t l = 0; l + 1 < p.sets.size(); ++l)
            linear *= p.sets[l + 1].back() > p.sets[l].back() ? (b - t) / (b - a)
                                                               : (t - a) / (b - a);
          CHECK(path_weight(sp, a, b, t, p) ==
                linear * path_weight(sp, a, b, t, p, PathWeight::Psi1) *
                    path_weight(sp, a, b, t, p, PathWeight::Psi2));
        }
      }
    }
}

TEST_CASE("partition weights at the endpoints") {
  oracle::Rng rng(67);
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_up_to(4, n)) {
      MuntzSpace sp(lam, n);
      Rational a = rng.positive(), b = a + rng.positive();
      for (int k = 0; k <= n; ++k) {
        Rational at_a = schur(lam, ArgMultiset{{a, n + 1}}) /
                        schur(lam, ArgMultiset{{a, n + 1 - k}, {b, k}});
        Rational at_b = schur(lam, ArgMultiset{{b, n + 1}}) /
                        schur(lam, ArgMultiset{{a, n - k}, {b, k + 1}});
        for (const auto& p : enumerate_paths(n, k)) {
          CHECK(path_weight(sp, a, b, a, p, PathWeight::Psi2) == at_a);
          CHECK(path_weight(sp, a, b, b, p, PathWeight::Psi2) == at_b);
        }
      }
      Rational t = a + (b - a) * frac(1, 3);
      CHECK(path_weight(sp, a, b, t, enumerate_paths(n, 0).front(), PathWeight::Psi2) ==
            schur(lam, ArgMultiset{{b, 1}, {t, n}}) / schur(lam, ArgMultiset{{b, 1}, {a, n}}));
    }
}

TEST_CASE("path sums reproduce the basis") {
  oracle::Rng rng(71);
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_up_to(4, n)) {
      MuntzSpace sp(lam, n);
      Rational a = rng.positive(), b = a + rng.positive();
      Rational t = a + (b - a) * frac(rng.uniform(1, 9), 10);
      auto B = bernstein_basis(sp, a, b);
      for (int k = 0; k <= n; ++k)
        CHECK(path_sum_basis(sp, a, b, t, k) == B.elements[k](t));
    }
}

TEST_CASE("two-path formula for the middle element of order two") {
  oracle::Rng rng(73);
  for (const auto& lam : partitions_up_to(4, 2)) {
    MuntzSpace sp(lam, 2);
    Rational a = rng.positive(), b = a + rng.positive();
    Rational t = a + (b - a) * frac(2, 5);
    const auto& l0 = sp.bottom();
    auto S = [&](std::initializer_list<Rational> xs) { return schur(lam, ArgMultiset(std::vector<Rational>(xs))); };
    Rational expect = (b - t) * (t - a) / ((b - a) * (b - a)) *
                      schur(l0, ArgMultiset{{a, 1}, {b, 1}}) / schur(l0, ArgMultiset{{t, 2}}) *
                      (S({a, a, t}) * S({t, t, b}) / (S({a, b, t}) * S({a, a, b})) +
                       S({b, b, t}) * S({t, t, a}) / (S({a, b, t}) * S({b, b, a})));
    CHECK(path_sum_basis(sp, a, b, t, 1) == expect);
  }
}

TEST_CASE("triangular evaluation") {
  oracle::Rng rng(79);
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_up_to(4, n)) {
      MuntzSpace sp(lam, n);
      Rational a = rng.positive(), b = a + rng.positive();
      std::vector<Point> pts;
      for (int i = 0; i <= n; ++i)
        pts.push_back({rng.any(), rng.any(), rng.any()});
      auto B = bernstein_basis(sp, a, b);
      for (int i = 0; i <= 3; ++i) {
        Rational t = a + (b - a) * frac(i, 3);
        Point expect(3, Rational(0));
        for (int k = 0; k <= n; ++k)
          expect = expect + B.elements[k](t) * pts[k];
        CHECK(de_casteljau_eval(sp, a, b, pts, t) == expect);
      }
    }
  // empty partition is the classical algorithm
  std::vector<Point> pts{{Rational(0)}, {Rational(3)}, {Rational(1)}};
  Rational t = frac(1, 4);
  Point p = de_casteljau_eval(MuntzSpace(Partition{}, 2), Rational(-1), Rational(1), pts, t);
  Rational u = (t + 1) / 2;
  CHECK(p[0] == 2 * u * (1 - u) * 3 + u * u);
  CHECK_THROWS_AS(de_casteljau_eval(MuntzSpace(Partition{}, 2), Rational(0), Rational(1),
                                    {{Rational(0)}, {Rational(1)}}, t),
                  Error);
}

} // TEST_SUITE
