#pragma once

#include "muntz/blossom.hpp"

#include <cstddef>
#include <vector>

namespace muntz {

/// Nested index sets A_0 = {k} c A_1 c ... c A_n = {0..n}, each stored ascending.
struct DeCasteljauPath {
  std::vector<std::vector<int>> sets;
  friend bool operator==(const DeCasteljauPath&, const DeCasteljauPath&) = default;
};

inline constexpr std::size_t max_path_count = 100'000;

/// Throws Error(IndexOutOfRange) or Error(PathCountTooLarge).
std::vector<DeCasteljauPath> enumerate_paths(int n, int k);

enum class PathWeight {
  Full, ///< edge weights beta (max+1 step) and alpha (min-1 step)
  Psi1, ///< bottom-partition factors only
  Psi2, ///< partition factors only
};

Rational path_weight(const MuntzSpace& space, const Rational& a, const Rational& b,
                     const Rational& t, const DeCasteljauPath& path,
                     PathWeight kind = PathWeight::Full);

/// Sum of the full weights over every path starting at {k}.
Rational path_sum_basis(const MuntzSpace& space, const Rational& a, const Rational& b,
                        const Rational& t, int k);

/// Triangular evaluation with pseudo-affinity weights.
Point de_casteljau_eval(const MuntzSpace& space, const Rational& a, const Rational& b,
                        const std::vector<Point>& points, const Rational& t);

} // namespace muntz
