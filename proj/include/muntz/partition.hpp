#pragma once

#include "muntz/rational.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace muntz {

/// Integer partition, stored without trailing zeros.
class Partition {
public:
  Partition() = default;
  /// Throws Error(NotAPartition) on a negative part or an increase.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based part; zero past the length.
  int operator[](int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[i - 1] : 0;
  }

  /// Parts padded with zeros to exactly n entries (n >= length()).
  std::vector<int> padded(int n) const;

  bool contains(const Partition& mu) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

Partition make_partition(const std::vector<int>& parts);

/// "(4^3,3^2,1)" style; "()" for the empty partition.
std::string to_string(const Partition& p);

Partition conjugate(const Partition& p);

struct HookContent {
  int hook;
  int content;
};

/// Box (i, j) is 1-based. Throws Error(BoxOutsideDiagram).
HookContent hook_and_content(const Partition& p, int i, int j);

/// f_lambda(n): number of semistandard tableaux with entries in 1..n.
BigInt ssyt_count(const Partition& p, int n);

/// f_lambda(n+1) / f_{lambda^(0)}(n). Throws Error(EmptyPartition).
Rational hook_ratio_first_row(const Partition& p, int n);

Partition bottom_partition(const Partition& p);

/// (lambda^(0), ..., lambda^(n)). Throws Error(LengthExceedsOrder).
std::vector<Partition> muntz_tableau(const Partition& p, int n);

std::vector<int> partition_to_exponents(const Partition& p, int n);
/// Throws Error(NotRealizable).
Partition exponents_to_partition(const std::vector<int>& s);

Partition border_complement(const Partition& p);

/// (lambda, n), (eta, n+1), ... ending at the empty partition.
std::vector<std::pair<Partition, int>> descent_chain(const Partition& p, int n);

/// True when E_lambda(n) is a subspace of E_mu(n+1).
bool is_dimension_elevation(const Partition& lambda, int n, const Partition& mu);

/// Every mu with E_lambda(n) inside E_mu(n+1) whose extra exponent is at
/// most lambda_1 + n + 1 + r_max. Sorted, without duplicates.
std::vector<Partition> dimension_elevation_partitions(const Partition& p, int n, int r_max);

struct FrobeniusForm {
  std::vector<int> arms;
  std::vector<int> legs;
  friend bool operator==(const FrobeniusForm&, const FrobeniusForm&) = default;
};

FrobeniusForm to_frobenius(const Partition& p);
/// Throws Error(NotAPartition) unless arms and legs are strictly decreasing,
/// non-negative and of equal length.
Partition from_frobenius(const FrobeniusForm& f);

using Tableau = std::vector<std::vector<int>>;

inline constexpr std::size_t default_enumeration_bound = 1'000'000;

/// Throws Error(EnumerationTooLarge) when f_lambda(n) exceeds the bound.
std::vector<Tableau> enumerate_ssyt(const Partition& p, int n,
                                    std::size_t bound = default_enumeration_bound);

/// All partitions of `weight`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int weight);
/// All partitions with weight at most `max_weight` and at most `max_length` parts.
std::vector<Partition> partitions_up_to(int max_weight, int max_length);

} // namespace muntz

template <>
struct std::hash<muntz::Partition> {
  std::size_t operator()(const muntz::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b9;
    for (int x : p.parts())
      h ^= std::hash<int>{}(x) + 0x9e3779b9 + (h << 6) + (h >> 2);
    return h;
  }
};
