#include "muntz/rational.hpp"

#include "muntz/error.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace muntz {

std::string_view error_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::NotAPartition: return "NotAPartition";
  case ErrorCode::BoxOutsideDiagram: return "BoxOutsideDiagram";
  case ErrorCode::EmptyPartition: return "EmptyPartition";
  case ErrorCode::LengthExceedsOrder: return "LengthExceedsOrder";
  case ErrorCode::NotRealizable: return "NotRealizable";
  case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
  case ErrorCode::RepeatedArguments: return "RepeatedArguments";
  case ErrorCode::NotContained: return "NotContained";
  case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
  case ErrorCode::SingularSystem: return "SingularSystem";
  case ErrorCode::DegenerateInterval: return "DegenerateInterval";
  case ErrorCode::NonPositiveEndpoint: return "NonPositiveEndpoint";
  case ErrorCode::FirstTwoPartsUnequal: return "FirstTwoPartsUnequal";
  case ErrorCode::FirstTwoPartsEqual: return "FirstTwoPartsEqual";
  case ErrorCode::NotAnElevation: return "NotAnElevation";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::PathCountTooLarge: return "PathCountTooLarge";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::DegenerateDirection: return "DegenerateDirection";
  case ErrorCode::InvalidInput: return "InvalidInput";
  case ErrorCode::LimitExceeded: return "LimitExceeded";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void bad(std::string_view text) {
  fail(ErrorCode::InvalidInput, "not a rational number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    bad(whole);
  BigInt z(std::string(s), 10);
  return neg ? BigInt(-z) : z;
}

} // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty())
    bad(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt p = parse_integer(text.substr(0, slash), text);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den))
      bad(text);
    BigInt q(std::string(den), 10);
    if (q == 0)
      bad(text);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  // decimal: [sign] digits [. digits] [e [sign] digits]
  std::string_view s = text;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view es = s.substr(e + 1);
    s = s.substr(0, e);
    std::string_view digits = es;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-'))
      digits.remove_prefix(1);
    if (!all_digits(digits) || digits.size() > 6)
      bad(text);
    exp10 = std::strtol(std::string(es).c_str(), nullptr, 10);
  }
  std::string mantissa;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      bad(text);
    mantissa = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s))
      bad(text);
    mantissa = std::string(s);
  }
  if (mantissa.empty())
    mantissa = "0";
  Rational r{BigInt(mantissa, 10)};
  BigInt ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0)
    r *= ten;
  else
    r /= ten;
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, q.get_d());
  return std::string(buf, res.ptr);
}

Rational frac(long p, long q) {
  if (q == 0)
    throw std::domain_error("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, int exponent) {
  Rational out;
  if (exponent >= 0) {
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  } else {
    if (base == 0)
      throw std::domain_error("zero to a negative power");
    mpz_pow_ui(out.get_num_mpz_t(), base.get_den_mpz_t(), -exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_num_mpz_t(), -exponent);
  }
  out.canonicalize();
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Point operator+(const Point& p, const Point& q) {
  if (p.size() != q.size())
    fail(ErrorCode::DimensionMismatch, "points of different dimension");
  Point r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = p[i] + q[i];
  return r;
}

Point operator-(const Point& p, const Point& q) {
  if (p.size() != q.size())
    fail(ErrorCode::DimensionMismatch, "points of different dimension");
  Point r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = p[i] - q[i];
  return r;
}

Point operator*(const Rational& s, const Point& p) {
  Point r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = s * p[i];
  return r;
}

} // namespace muntz
