#pragma once

#include "muntz/rational.hpp"

#include <vector>

namespace muntz {

using Matrix = std::vector<std::vector<Rational>>;

/// Determinant by fraction-free (Bareiss) elimination. Rows are scaled to
/// integers first, so every intermediate value is an exact integer.
Rational determinant(const Matrix& m);

/// Solves m x = rhs exactly. Throws Error(SingularSystem) when det(m) = 0.
std::vector<Rational> solve(const Matrix& m, const std::vector<Rational>& rhs);

} // namespace muntz
