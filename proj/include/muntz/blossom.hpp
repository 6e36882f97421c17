#pragma once

#include "muntz/partition.hpp"
#include "muntz/rational.hpp"
#include "muntz/symfunc.hpp"

#include <vector>

namespace muntz {

/// E_lambda(n) = span(1, t^s1, ..., t^sn).
class MuntzSpace {
public:
  /// Throws Error(LengthExceedsOrder).
  MuntzSpace(Partition lambda, int n);

  const Partition& lambda() const noexcept { return lambda_; }
  int n() const noexcept { return n_; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  const std::vector<Partition>& tableau() const noexcept { return tableau_; }
  const Partition& bottom() const noexcept { return tableau_[0]; }

  /// Non-empty partitions live on the open positive half-line.
  bool positive_domain() const noexcept { return !lambda_.empty(); }
  /// Throws Error(NonPositiveArgument) when x is outside the domain.
  void check_argument(const Rational& x) const;

private:
  Partition lambda_;
  int n_;
  std::vector<int> exponents_;
  std::vector<Partition> tableau_;
};

MuntzSpace make_space(const Partition& lambda, int n);

/// Blossom from the Schur-function formula; repeated arguments allowed.
std::vector<Rational> blossom(const MuntzSpace& space, const std::vector<Rational>& args);

/// Blossom as the intersection of osculating flats, solved as an exact
/// linear system. Throws Error(RepeatedArguments) on a repeat.
std::vector<Rational> blossom_oracle(const MuntzSpace& space, const std::vector<Rational>& args);

struct Affinity {
  Rational alpha;
  Rational beta;
};

/// Pseudo-affinity factor for blossom(U, t) between blossom(U, a) and blossom(U, b).
Affinity pseudo_affinity(const MuntzSpace& space, const ArgMultiset& U, const Rational& a,
                         const Rational& b, const Rational& t);

} // namespace muntz
