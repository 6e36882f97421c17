#include "muntz/blossom.hpp"

#include "muntz/error.hpp"
#include "muntz/linalg.hpp"

namespace muntz {

MuntzSpace::MuntzSpace(Partition lambda, int n)
    : lambda_(std::move(lambda)), n_(n), exponents_(partition_to_exponents(lambda_, n)),
      tableau_(muntz_tableau(lambda_, n)) {}

void MuntzSpace::check_argument(const Rational& x) const {
  if (positive_domain() && x <= 0)
    fail(ErrorCode::NonPositiveArgument,
         "argument " + to_string(x) + " must be positive for partition " + to_string(lambda_));
}

MuntzSpace make_space(const Partition& lambda, int n) { return MuntzSpace(lambda, n); }

namespace {

void check_arity(const MuntzSpace& space, std::size_t count) {
  if (static_cast<int>(count) != space.n())
    fail(ErrorCode::DimensionMismatch, "blossom takes exactly n arguments");
}

} // namespace

std::vector<Rational> blossom(const MuntzSpace& space, const std::vector<Rational>& args) {
  check_arity(space, args.size());
  for (const auto& x : args)
    space.check_argument(x);
  const int n = space.n();
  const auto& tab = space.tableau();
  SymmetricEvaluator ev(ArgMultiset(args), space.lambda()[1] + 1 + n);
  const Rational f0(ssyt_count(tab[0], n));
  const Rational s0 = ev.schur(tab[0]);
  std::vector<Rational> phi(n);
  for (int i = 1; i <= n; ++i)
    phi[i - 1] = f0 * ev.schur(tab[i]) / (Rational(ssyt_count(tab[i], n)) * s0);
  return phi;
}

std::vector<Rational> blossom_oracle(const MuntzSpace& space, const std::vector<Rational>& args) {
  check_arity(space, args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    space.check_argument(args[i]);
    for (std::size_t j = i + 1; j < args.size(); ++j)
      if (args[i] == args[j])
        fail(ErrorCode::RepeatedArguments, "oracle needs pairwise distinct arguments");
  }
  const int n = space.n();
  const auto& s = space.exponents();

  // d-th derivative of t^s at u
  auto deriv = [](int e, int d, const Rational& u) {
    Rational c = 1;
    for (int i = 0; i < d; ++i)
      c *= e - i;
    return c == 0 ? c : c * pow(u, e - d);
  };

  Matrix system(n, std::vector<Rational>(n));
  std::vector<Rational> rhs(n);
  for (int row = 0; row < n; ++row) {
    const Rational& u = args[row];
    // det(X - phi(u), phi'(u), ..., phi^(n-1)(u)) expanded along column 0
    for (int j = 0; j < n; ++j) {
      Matrix minor;
      for (int r = 0; r < n; ++r) {
        if (r == j)
          continue;
        std::vector<Rational> line;
        for (int d = 1; d < n; ++d)
          line.push_back(deriv(s[r], d, u));
        minor.push_back(std::move(line));
      }
      Rational cof = determinant(minor);
      if (j % 2)
        cof = -cof;
      system[row][j] = cof;
      rhs[row] += cof * pow(u, s[j]);
    }
  }
  return solve(system, rhs);
}

Affinity pseudo_affinity(const MuntzSpace& space, const ArgMultiset& U, const Rational& a,
                         const Rational& b, const Rational& t) {
  if (U.size() != space.n() - 1)
    fail(ErrorCode::DimensionMismatch, "pseudo-affinity needs n-1 common arguments");
  if (a >= b)
    fail(ErrorCode::DegenerateInterval, "interval needs a < b");
  for (const auto& [v, m] : U.entries())
    space.check_argument(v);
  space.check_argument(a);
  space.check_argument(t);

  const Partition& lam = space.lambda();
  const Partition& bot = space.bottom();
  auto with = [&](std::initializer_list<Rational> extra) {
    ArgMultiset m = U;
    for (const auto& x : extra)
      m.add(x);
    return m;
  };
  const Rational s_ab = schur(lam, with({a, b}));
  const Rational s0_t = schur(bot, with({t}));
  Affinity r;
  r.alpha = (t - a) / (b - a) * schur(lam, with({a, t})) * schur(bot, with({b})) / (s_ab * s0_t);
  r.beta = (b - t) / (b - a) * schur(lam, with({b, t})) * schur(bot, with({a})) / (s_ab * s0_t);
  return r;
}

} // namespace muntz
