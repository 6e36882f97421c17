#pragma once

#include "muntz/error.hpp"
#include "muntz/geometry.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace muntz {

using Json = nlohmann::json;

struct FieldError {
  std::string field; ///< JSON path such as "points[2][0]"; empty for the whole document
  std::string message;
};

/// Malformed input, as opposed to well-formed input outside a domain.
class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<FieldError> errors);
  ValidationError(std::string field, std::string message)
      : ValidationError(std::vector<FieldError>{{std::move(field), std::move(message)}}) {}
  const std::vector<FieldError>& errors() const noexcept { return errors_; }

private:
  std::vector<FieldError> errors_;
};

/// Floating-point literals are kept as their source text (a JSON string) so
/// they can be converted exactly. Throws ValidationError on syntax errors.
Json parse_json(std::string_view text);

/// Collects field errors while reading a document, then throws them together.
class Reader {
public:
  explicit Reader(const Json& doc) : doc_(doc) {}
  Reader(Json&&) = delete;

  bool has(const std::string& key) const;
  const Json* field(const std::string& key, bool required = true);

  Rational rational(const std::string& key);
  int integer(const std::string& key, int lo, int hi);
  int integer_or(const std::string& key, int fallback, int lo, int hi);
  Partition partition(const std::string& key);
  std::pair<Rational, Rational> interval(const std::string& key);
  std::vector<Point> points(const std::string& key);
  std::vector<std::vector<Point>> grid(const std::string& key);

  void error(std::string field, std::string message);
  /// Throws ValidationError if anything was recorded.
  void finish() const;
  bool ok() const { return errors_.empty(); }

private:
  std::optional<Rational> rational_at(const Json& j, const std::string& path);
  std::optional<Point> point_at(const Json& j, const std::string& path);

  const Json& doc_;
  std::vector<FieldError> errors_;
};

/// Curve document: {"partition": [..], "n": int, "interval": [a, b], "points": [[..], ..]}.
MuntzCurve read_curve(Reader& r);
MuntzCurve read_curve(const Json& doc);

/// Surface document: {"partition_t": [..], "partition_s": [..], "n": int,
/// "interval_t": [a, b], "interval_s": [c, d], "grid": [[[x, y, z], ..], ..]}.
TensorSurface read_surface(Reader& r);

Json to_json(const Partition& p);
Json exact_json(const Rational& q);
Json exact_json(const Point& p);
/// {"exact": ..., "decimal": ...}
Json rendered_json(const Rational& q);
Json rendered_json(const Point& p);
Json to_json(const SparsePolynomial& p);
/// Same schema read_curve accepts, with exact strings.
Json to_json(const MuntzCurve& c);

Json error_json(const std::vector<FieldError>& errors);
Json error_json(const Error& e);

} // namespace muntz
