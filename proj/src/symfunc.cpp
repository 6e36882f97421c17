#include "muntz/symfunc.hpp"

#include "muntz/error.hpp"
#include "muntz/linalg.hpp"

#include <algorithm>

namespace muntz {

ArgMultiset::ArgMultiset(std::initializer_list<std::pair<Rational, int>> entries) {
  for (const auto& [v, m] : entries)
    add(v, m);
}

ArgMultiset::ArgMultiset(const std::vector<Rational>& values) {
  for (const auto& v : values)
    add(v, 1);
}

ArgMultiset& ArgMultiset::add(const Rational& value, int multiplicity) {
  if (multiplicity < 0)
    fail(ErrorCode::InvalidInput, "negative multiplicity");
  if (multiplicity > 0) {
    entries_.emplace_back(value, multiplicity);
    size_ += multiplicity;
  }
  return *this;
}

ArgMultiset& ArgMultiset::add(const ArgMultiset& other) {
  for (const auto& [v, m] : other.entries_)
    add(v, m);
  return *this;
}

std::vector<Rational> ArgMultiset::values() const {
  std::vector<Rational> out;
  out.reserve(size_);
  for (const auto& [v, m] : entries_)
    for (int i = 0; i < m; ++i)
      out.push_back(v);
  return out;
}

Rational ArgMultiset::product() const {
  Rational p = 1;
  for (const auto& [v, m] : entries_)
    p *= pow(v, m);
  return p;
}

SymmetricEvaluator::SymmetricEvaluator(const ArgMultiset& args, int max_degree)
    : size_(args.size()), max_degree_(std::max(max_degree, 0)) {
  // coefficients of prod (1 + u x)
  e_.assign(size_ + 1, Rational(0));
  e_[0] = 1;
  int deg = 0;
  for (const auto& [v, m] : args.entries())
    for (int rep = 0; rep < m; ++rep) {
      ++deg;
      for (int r = deg; r >= 1; --r)
        e_[r] += v * e_[r - 1];
    }
  h_.assign(max_degree_ + 1, Rational(0));
  h_[0] = 1;
  for (int r = 1; r <= max_degree_; ++r) {
    Rational s = 0;
    for (int i = 1; i <= std::min(r, size_); ++i) {
      if (i % 2)
        s += e_[i] * h_[r - i];
      else
        s -= e_[i] * h_[r - i];
    }
    h_[r] = s;
  }
}

const Rational& SymmetricEvaluator::e(int r) const {
  return r < 0 || r > size_ ? zero_ : e_[r];
}

const Rational& SymmetricEvaluator::h(int r) const {
  if (r < 0)
    return zero_;
  if (r > max_degree_)
    throw std::out_of_range("complete symmetric degree beyond evaluator range");
  return h_[r];
}

Rational SymmetricEvaluator::schur(const Partition& lambda) const {
  if (lambda.length() > size_)
    return 0;
  return skew_schur(lambda, Partition{});
}

Rational SymmetricEvaluator::skew_schur(const Partition& lambda, const Partition& mu) const {
  if (!lambda.contains(mu))
    fail(ErrorCode::NotContained, to_string(mu) + " is not inside " + to_string(lambda));
  const int l = lambda.length();
  Matrix m(l, std::vector<Rational>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      m[i - 1][j - 1] = h(lambda[i] - mu[j] - i + j);
  return determinant(m);
}

Rational SymmetricEvaluator::schur_nk(const Partition& lambda) const {
  Partition c = conjugate(lambda);
  const int l = c.length();
  Matrix m(l, std::vector<Rational>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      m[i - 1][j - 1] = e(c[i] - i + j);
  return determinant(m);
}

Rational SymmetricEvaluator::hook_schur(int p, int q) const {
  if (p < 0 || q < 0)
    return 0;
  Rational s = 0;
  for (int m = 0; m <= q; ++m) {
    Rational term = h(p + 1 + m) * e(q - m);
    if (m % 2)
      s -= term;
    else
      s += term;
  }
  return s;
}

Rational SymmetricEvaluator::schur_giambelli(const Partition& lambda) const {
  FrobeniusForm f = to_frobenius(lambda);
  const std::size_t r = f.arms.size();
  Matrix m(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      m[i][j] = hook_schur(f.arms[i], f.legs[j]);
  return determinant(m);
}

Rational elementary(int r, const ArgMultiset& args) {
  return SymmetricEvaluator(args, 0).e(r);
}

Rational complete(int r, const ArgMultiset& args) {
  if (r < 0)
    return 0;
  return SymmetricEvaluator(args, r).h(r);
}

Rational schur(const Partition& lambda, const ArgMultiset& args) {
  return SymmetricEvaluator(args, lambda.empty() ? 0 : lambda[1] + lambda.length())
      .schur(lambda);
}

Rational skew_schur(const Partition& lambda, const Partition& mu, const ArgMultiset& args) {
  return SymmetricEvaluator(args, lambda.empty() ? 0 : lambda[1] + lambda.length())
      .skew_schur(lambda, mu);
}

Rational schur_nk(const Partition& lambda, const ArgMultiset& args) {
  return SymmetricEvaluator(args, 0).schur_nk(lambda);
}

Rational schur_giambelli(const Partition& lambda, const ArgMultiset& args) {
  return SymmetricEvaluator(args, lambda.weight() + 1).schur_giambelli(lambda);
}

Rational schur_bialternant(const Partition& lambda, const ArgMultiset& args) {
  std::vector<Rational> u = args.values();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] == u[j])
        fail(ErrorCode::RepeatedArguments, "bialternant needs pairwise distinct arguments");
  const int n = static_cast<int>(u.size());
  if (lambda.length() > n)
    return 0;
  Matrix num(n, std::vector<Rational>(n)), vdm(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      num[i][j - 1] = pow(u[i], lambda[j] + n - j);
      vdm[i][j - 1] = pow(u[i], n - j);
    }
  return determinant(num) / determinant(vdm);
}

Rational schur_ssyt_oracle(const Partition& lambda, const ArgMultiset& args) {
  std::vector<Rational> u = args.values();
  Rational sum = 0;
  for (const auto& t : enumerate_ssyt(lambda, static_cast<int>(u.size()))) {
    Rational w = 1;
    for (const auto& row : t)
      for (int x : row)
        w *= u[x - 1];
    sum += w;
  }
  return sum;
}

} // namespace muntz
