#include "muntz/linalg.hpp"

#include "muntz/error.hpp"

#include <utility>

namespace muntz {

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Multiplies each row by the lcm of its denominators; returns the product of
// the multipliers.
BigInt to_integer_rows(const Matrix& m, IntMatrix& out) {
  BigInt scale = 1;
  out.assign(m.size(), {});
  for (std::size_t i = 0; i < m.size(); ++i) {
    BigInt l = 1;
    for (const auto& x : m[i])
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    out[i].reserve(m[i].size());
    for (const auto& x : m[i])
      out[i].push_back(BigInt(x.get_num() * (l / x.get_den())));
    scale *= l;
  }
  return scale;
}

// In-place Bareiss forward elimination on the first `cols` columns.
// Returns the sign flip from row swaps, or 0 if a pivot column is empty.
int bareiss(IntMatrix& a, std::size_t cols) {
  const std::size_t n = a.size();
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n && k < cols; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0)
        ++p;
      if (p == n)
        return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < a[i].size(); ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign;
}

} // namespace

Rational determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  IntMatrix a;
  BigInt scale = to_integer_rows(m, a);
  int sign = bareiss(a, n);
  if (sign == 0)
    return 0;
  Rational d(BigInt(sign * a[n - 1][n - 1]), scale);
  d.canonicalize();
  return d;
}

std::vector<Rational> solve(const Matrix& m, const std::vector<Rational>& rhs) {
  const std::size_t n = m.size();
  Matrix aug = m;
  for (std::size_t i = 0; i < n; ++i)
    aug[i].push_back(rhs[i]);
  IntMatrix a;
  to_integer_rows(aug, a);
  if (bareiss(a, n) == 0 || (n > 0 && a[n - 1][n - 1] == 0))
    fail(ErrorCode::SingularSystem, "singular linear system");
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j)
      s -= Rational(a[i][j]) * x[j];
    x[i] = s / Rational(a[i][i]);
  }
  return x;
}

} // namespace muntz
