#include "muntz/polynomial.hpp"

#include <stdexcept>

namespace muntz {

SparsePolynomial::SparsePolynomial(const Rational& constant) { add_term(0, constant); }

SparsePolynomial SparsePolynomial::monomial(const Rational& coeff, int exponent) {
  if (exponent < 0)
    throw std::invalid_argument("negative exponent");
  SparsePolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

void SparsePolynomial::add_term(int exponent, const Rational& coeff) {
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Rational SparsePolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePolynomial::operator()(const Rational& t) const {
  // Horner over the sparse exponents, highest first
  Rational acc = 0;
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= pow(t, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0)
    acc *= pow(t, prev);
  return acc;
}

SparsePolynomial SparsePolynomial::derivative(int times) const {
  SparsePolynomial d;
  for (const auto& [e, c] : terms_) {
    if (e < times)
      continue;
    Rational f = c;
    for (int i = 0; i < times; ++i)
      f *= e - i;
    d.add_term(e - times, f);
  }
  return d;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  for (const auto& [e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  for (const auto& [e, c] : other.terms_)
    add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_)
    c *= s;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& p, const SparsePolynomial& q) {
  SparsePolynomial r;
  for (const auto& [e1, c1] : p.terms_)
    for (const auto& [e2, c2] : q.terms_)
      r.add_term(e1 + e2, c1 * c2);
  return r;
}

SparsePolynomial pow(const SparsePolynomial& p, int exponent) {
  SparsePolynomial r(1), base = p;
  while (exponent > 0) {
    if (exponent & 1)
      r = r * base;
    base = base * base;
    exponent >>= 1;
  }
  return r;
}

std::string to_string(const SparsePolynomial& p) {
  if (p.is_zero())
    return "0";
  std::string s;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    bool unit = mag == 1;
    if (!unit || e == 0)
      s += to_string(mag);
    if (e > 0) {
      if (!unit)
        s += ' ';
      s += 't';
      if (e > 1)
        s += '^' + std::to_string(e);
    }
  }
  return s;
}

} // namespace muntz
