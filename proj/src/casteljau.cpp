#include "muntz/casteljau.hpp"

#include "muntz/bernstein.hpp"
#include "muntz/error.hpp"

namespace muntz {

std::vector<DeCasteljauPath> enumerate_paths(int n, int k) {
  if (n < 1 || k < 0 || k > n)
    fail(ErrorCode::IndexOutOfRange, "start index " + std::to_string(k) + " outside 0.." +
                                         std::to_string(n));
  if (binomial(n, k) > BigInt(static_cast<unsigned long>(max_path_count)))
    fail(ErrorCode::PathCountTooLarge, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                           ") paths exceed the enumeration bound");
  std::vector<DeCasteljauPath> out;
  DeCasteljauPath cur;
  auto rec = [&](auto&& self, int lo, int hi) -> void {
    std::vector<int> set;
    for (int i = lo; i <= hi; ++i)
      set.push_back(i);
    cur.sets.push_back(std::move(set));
    if (hi - lo == n) {
      out.push_back(cur);
    } else {
      if (hi < n)
        self(self, lo, hi + 1);
      if (lo > 0)
        self(self, lo - 1, hi);
    }
    cur.sets.pop_back();
  };
  rec(rec, k, k);
  return out;
}

Rational path_weight(const MuntzSpace& space, const Rational& a, const Rational& b,
                     const Rational& t, const DeCasteljauPath& path, PathWeight kind) {
  check_interval(space.lambda(), a, b);
  space.check_argument(t);
  const int n = space.n();
  const Partition& lam = space.lambda();
  const Partition& bot = space.bottom();
  Rational w = 1;
  for (std::size_t l = 0; l + 1 < path.sets.size(); ++l) {
    const auto& cur = path.sets[l];
    const auto& next = path.sets[l + 1];
    const int size = static_cast<int>(cur.size());
    const int lo = next.front();
    const bool plus = next.back() > cur.back();
    ArgMultiset U{{t, size - 1}, {b, lo}, {a, n - size - lo}};
    if (kind == PathWeight::Full) {
      Affinity af = pseudo_affinity(space, U, a, b, t);
      w *= plus ? af.beta : af.alpha;
      continue;
    }
    auto with = [&](std::initializer_list<Rational> extra) {
      ArgMultiset m = U;
      for (const auto& x : extra)
        m.add(x);
      return m;
    };
    if (kind == PathWeight::Psi1)
      w *= schur(bot, with({plus ? a : b})) / schur(bot, with({t}));
    else
      w *= schur(lam, with({plus ? b : a, t})) / schur(lam, with({a, b}));
  }
  return w;
}

Rational path_sum_basis(const MuntzSpace& space, const Rational& a, const Rational& b,
                        const Rational& t, int k) {
  Rational sum = 0;
  for (const auto& p : enumerate_paths(space.n(), k))
    sum += path_weight(space, a, b, t, p);
  return sum;
}

Point de_casteljau_eval(const MuntzSpace& space, const Rational& a, const Rational& b,
                        const std::vector<Point>& points, const Rational& t) {
  const int n = space.n();
  if (static_cast<int>(points.size()) != n + 1)
    fail(ErrorCode::DimensionMismatch, "need exactly n+1 control points");
  for (const auto& p : points)
    if (p.size() != points[0].size())
      fail(ErrorCode::DimensionMismatch, "control points of different dimension");
  check_interval(space.lambda(), a, b);
  space.check_argument(t);

  std::vector<Point> level = points;
  for (int r = 1; r <= n; ++r) {
    for (int i = 0; i + r <= n; ++i) {
      ArgMultiset U{{a, n - r - i}, {b, i}, {t, r - 1}};
      Affinity af = pseudo_affinity(space, U, a, b, t);
      level[i] = af.beta * level[i] + af.alpha * level[i + 1];
    }
  }
  return level[0];
}

} // namespace muntz
