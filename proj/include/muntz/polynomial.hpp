#pragma once

#include "muntz/rational.hpp"

#include <map>
#include <string>

namespace muntz {

/// Univariate polynomial with exact coefficients; zero terms are never stored.
class SparsePolynomial {
public:
  SparsePolynomial() = default;
  SparsePolynomial(const Rational& constant);
  static SparsePolynomial monomial(const Rational& coeff, int exponent);

  const std::map<int, Rational>& terms() const noexcept { return terms_; }
  Rational coefficient(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  Rational operator()(const Rational& t) const;
  SparsePolynomial derivative(int times = 1) const;

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Rational& s);

  friend SparsePolynomial operator+(SparsePolynomial p, const SparsePolynomial& q) { return p += q; }
  friend SparsePolynomial operator-(SparsePolynomial p, const SparsePolynomial& q) { return p -= q; }
  friend SparsePolynomial operator*(const SparsePolynomial& p, const SparsePolynomial& q);
  friend SparsePolynomial operator*(const Rational& s, SparsePolynomial p) { return p *= s; }
  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
  void add_term(int exponent, const Rational& coeff);
  std::map<int, Rational> terms_;
};

SparsePolynomial pow(const SparsePolynomial& p, int exponent);

/// "3/2 t^4 - t + 1" in decreasing exponent order; "0" for zero.
std::string to_string(const SparsePolynomial& p);

} // namespace muntz
