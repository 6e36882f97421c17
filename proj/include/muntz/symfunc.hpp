#pragma once

#include "muntz/partition.hpp"
#include "muntz/rational.hpp"

#include <utility>
#include <vector>

namespace muntz {

/// Symmetric-function arguments as values with multiplicities.
class ArgMultiset {
public:
  ArgMultiset() = default;
  ArgMultiset(std::initializer_list<std::pair<Rational, int>> entries);
  explicit ArgMultiset(const std::vector<Rational>& values);

  /// Appends `value` with the given multiplicity (ignored if zero).
  ArgMultiset& add(const Rational& value, int multiplicity = 1);
  ArgMultiset& add(const ArgMultiset& other);

  const std::vector<std::pair<Rational, int>>& entries() const noexcept { return entries_; }
  int size() const noexcept { return size_; }
  std::vector<Rational> values() const;
  Rational product() const;

private:
  std::vector<std::pair<Rational, int>> entries_;
  int size_ = 0;
};

/// Precomputed e_r and h_r for one argument multiset.
class SymmetricEvaluator {
public:
  SymmetricEvaluator(const ArgMultiset& args, int max_degree);

  int size() const noexcept { return size_; }
  const Rational& e(int r) const;
  /// Requires r <= max_degree.
  const Rational& h(int r) const;

  Rational schur(const Partition& lambda) const;
  Rational skew_schur(const Partition& lambda, const Partition& mu) const;
  Rational schur_nk(const Partition& lambda) const;
  Rational schur_giambelli(const Partition& lambda) const;
  /// S_(p|q); zero when p or q is negative.
  Rational hook_schur(int p, int q) const;

private:
  int size_;
  int max_degree_;
  std::vector<Rational> e_;
  std::vector<Rational> h_;
  Rational zero_;
};

Rational elementary(int r, const ArgMultiset& args);
Rational complete(int r, const ArgMultiset& args);

/// Jacobi-Trudi; the canonical backend.
Rational schur(const Partition& lambda, const ArgMultiset& args);
/// Throws Error(RepeatedArguments) unless all values are distinct.
Rational schur_bialternant(const Partition& lambda, const ArgMultiset& args);
Rational schur_nk(const Partition& lambda, const ArgMultiset& args);
Rational schur_giambelli(const Partition& lambda, const ArgMultiset& args);
Rational schur_ssyt_oracle(const Partition& lambda, const ArgMultiset& args);
/// Throws Error(NotContained) unless mu is inside lambda.
Rational skew_schur(const Partition& lambda, const Partition& mu, const ArgMultiset& args);

} // namespace muntz
