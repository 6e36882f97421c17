#include "muntz/json_io.hpp"

#include <limits>

namespace muntz {

namespace {

std::string join_messages(const std::vector<FieldError>& errors) {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty())
      out += "; ";
    out += (e.field.empty() ? std::string("document") : e.field) + ": " + e.message;
  }
  return out;
}

// Replaces float values by their lexeme; everything else as in the DOM parser.
class LexemeParser : public nlohmann::detail::json_sax_dom_parser<Json> {
public:
  using json_sax_dom_parser::json_sax_dom_parser;
  bool number_float(Json::number_float_t, const Json::string_t& s) {
    Json::string_t copy = s;
    return string(copy);
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& e) {
    message = e.what();
    return false;
  }
  std::string message;
};

std::string sub(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

} // namespace

ValidationError::ValidationError(std::vector<FieldError> errors)
    : Error(ErrorCode::InvalidInput, join_messages(errors)), errors_(std::move(errors)) {}

Json parse_json(std::string_view text) {
  Json out;
  LexemeParser sax(out, false);
  if (!Json::sax_parse(text, &sax) || out.is_discarded())
    throw ValidationError("", sax.message.empty() ? "malformed JSON" : sax.message);
  return out;
}

bool Reader::has(const std::string& key) const {
  return doc_.is_object() && doc_.contains(key) && !doc_.at(key).is_null();
}

const Json* Reader::field(const std::string& key, bool required) {
  if (!doc_.is_object()) {
    if (errors_.empty() || !errors_.front().field.empty())
      error("", "expected a JSON object");
    return nullptr;
  }
  if (!has(key)) {
    if (required)
      error(key, "missing");
    return nullptr;
  }
  return &doc_.at(key);
}

void Reader::error(std::string field, std::string message) {
  errors_.push_back({std::move(field), std::move(message)});
}

void Reader::finish() const {
  if (!errors_.empty())
    throw ValidationError(errors_);
}

std::optional<Rational> Reader::rational_at(const Json& j, const std::string& path) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? Rational(BigInt(std::to_string(j.get<std::uint64_t>())))
                                  : Rational(BigInt(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      error(path, "not a rational: \"" + j.get<std::string>() + "\"");
      return std::nullopt;
    }
  }
  error(path, "expected a number or a \"p/q\" string");
  return std::nullopt;
}

Rational Reader::rational(const std::string& key) {
  const Json* j = field(key);
  if (!j)
    return 0;
  return rational_at(*j, key).value_or(0);
}

int Reader::integer(const std::string& key, int lo, int hi) {
  const Json* j = field(key);
  if (!j)
    return lo;
  if (!j->is_number_integer()) {
    error(key, "expected an integer");
    return lo;
  }
  auto v = j->get<std::int64_t>();
  if (j->is_number_unsigned() && j->get<std::uint64_t>() > std::uint64_t(hi))
    v = std::int64_t(hi) + 1;
  if (v < lo || v > hi) {
    error(key, "must be between " + std::to_string(lo) + " and " + std::to_string(hi));
    return lo;
  }
  return static_cast<int>(v);
}

int Reader::integer_or(const std::string& key, int fallback, int lo, int hi) {
  return has(key) ? integer(key, lo, hi) : fallback;
}

Partition Reader::partition(const std::string& key) {
  const Json* j = field(key);
  if (!j)
    return {};
  if (!j->is_array()) {
    error(key, "expected an array of parts");
    return {};
  }
  std::vector<int> parts;
  bool good = true;
  for (std::size_t i = 0; i < j->size(); ++i) {
    const Json& v = (*j)[i];
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > std::numeric_limits<int>::max()) {
      error(sub(key, i), "expected a non-negative integer");
      good = false;
    } else {
      parts.push_back(static_cast<int>(v.get<std::int64_t>()));
    }
  }
  if (!good)
    return {};
  try {
    return Partition(parts);
  } catch (const Error& e) {
    error(key, e.what());
    return {};
  }
}

std::pair<Rational, Rational> Reader::interval(const std::string& key) {
  const Json* j = field(key);
  if (!j)
    return {0, 1};
  if (!j->is_array() || j->size() != 2) {
    error(key, "expected [lo, hi]");
    return {0, 1};
  }
  auto lo = rational_at((*j)[0], sub(key, 0));
  auto hi = rational_at((*j)[1], sub(key, 1));
  return {lo.value_or(0), hi.value_or(1)};
}

std::optional<Point> Reader::point_at(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    error(path, "expected a non-empty array of coordinates");
    return std::nullopt;
  }
  Point p;
  bool good = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto q = rational_at(j[i], sub(path, i));
    good = good && q.has_value();
    p.push_back(q.value_or(0));
  }
  if (!good)
    return std::nullopt;
  return p;
}

std::vector<Point> Reader::points(const std::string& key) {
  const Json* j = field(key);
  if (!j)
    return {};
  if (!j->is_array()) {
    error(key, "expected an array of points");
    return {};
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < j->size(); ++i)
    if (auto p = point_at((*j)[i], sub(key, i)))
      out.push_back(std::move(*p));
  return out;
}

std::vector<std::vector<Point>> Reader::grid(const std::string& key) {
  const Json* j = field(key);
  if (!j)
    return {};
  if (!j->is_array()) {
    error(key, "expected an array of rows");
    return {};
  }
  std::vector<std::vector<Point>> out;
  for (std::size_t i = 0; i < j->size(); ++i) {
    const Json& row = (*j)[i];
    if (!row.is_array()) {
      error(sub(key, i), "expected an array of points");
      continue;
    }
    std::vector<Point> pts;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (auto p = point_at(row[k], sub(sub(key, i), k)))
        pts.push_back(std::move(*p));
    out.push_back(std::move(pts));
  }
  return out;
}

MuntzCurve read_curve(Reader& r) {
  Partition lam = r.partition("partition");
  int n = r.integer("n", 1, std::numeric_limits<int>::max());
  auto [a, b] = r.interval("interval");
  auto pts = r.points("points");
  r.finish();
  return make_curve(lam, n, a, b, std::move(pts));
}

MuntzCurve read_curve(const Json& doc) {
  Reader r(doc);
  return read_curve(r);
}

TensorSurface read_surface(Reader& r) {
  Partition lam = r.partition("partition_t");
  Partition mu = r.partition("partition_s");
  int n = r.integer("n", 1, std::numeric_limits<int>::max());
  auto [a, b] = r.interval("interval_t");
  auto [c, d] = r.interval("interval_s");
  auto g = r.grid("grid");
  r.finish();
  return make_surface(lam, mu, n, a, b, c, d, std::move(g));
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json exact_json(const Rational& q) { return to_string(q); }

Json exact_json(const Point& p) {
  Json out = Json::array();
  for (const auto& x : p)
    out.push_back(to_string(x));
  return out;
}

Json rendered_json(const Rational& q) {
  return {{"exact", to_string(q)}, {"decimal", q.get_d()}};
}

Json rendered_json(const Point& p) {
  Json dec = Json::array();
  for (const auto& x : p)
    dec.push_back(x.get_d());
  return {{"exact", exact_json(p)}, {"decimal", dec}};
}

Json to_json(const SparsePolynomial& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"exponent", it->first}, {"coefficient", to_string(it->second)}});
  return {{"text", to_string(p)}, {"terms", terms}};
}

Json to_json(const MuntzCurve& c) {
  Json pts = Json::array();
  for (const auto& p : c.points)
    pts.push_back(exact_json(p));
  return {{"partition", to_json(c.space.lambda())},
          {"n", c.space.n()},
          {"interval", {to_string(c.a), to_string(c.b)}},
          {"points", pts}};
}

Json error_json(const std::vector<FieldError>& errors) {
  Json list = Json::array();
  for (const auto& e : errors)
    list.push_back({{"field", e.field}, {"message", e.message}});
  return {{"errors", list}};
}

Json error_json(const Error& e) {
  if (auto v = dynamic_cast<const ValidationError*>(&e))
    return error_json(v->errors());
  return {{"error", {{"code", std::string(error_name(e.code()))}, {"message", e.what()}}}};
}

} // namespace muntz
