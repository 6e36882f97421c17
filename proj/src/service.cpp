#include "muntz/service.hpp"

#include "muntz/casteljau.hpp"

#include <httplib.h>

#include <cstdlib>
#include <limits>

namespace muntz {

namespace {

constexpr int int_max = std::numeric_limits<int>::max();

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v)
    return fallback;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (*end != '\0' || x <= 0 || x > int_max)
    return fallback;
  return static_cast<int>(x);
}

MuntzCurve checked_curve(Reader& r, const Limits& limits) {
  MuntzCurve c = read_curve(r);
  check_limits(limits, c.space.lambda(), c.space.n());
  return c;
}

Json points_json(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const auto& p : pts)
    out.push_back(rendered_json(p));
  return out;
}

Json rationals_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs)
    out.push_back(rendered_json(x));
  return out;
}

} // namespace

Limits Limits::from_env() {
  Limits l;
  l.max_order = env_int("MUNTZ_MAX_ORDER", l.max_order);
  l.max_weight = env_int("MUNTZ_MAX_WEIGHT", l.max_weight);
  return l;
}

void check_limits(const Limits& limits, const Partition& lambda, int n) {
  if (n > limits.max_order)
    fail(ErrorCode::LimitExceeded,
         "order " + std::to_string(n) + " exceeds the limit " + std::to_string(limits.max_order));
  if (lambda.weight() > limits.max_weight)
    fail(ErrorCode::LimitExceeded, "partition weight " + std::to_string(lambda.weight()) +
                                       " exceeds the limit " +
                                       std::to_string(limits.max_weight));
}

Json basis_doc(const Json& req, const Limits& limits) {
  Reader r(req);
  Partition lam = r.partition("partition");
  int n = r.integer("n", 1, int_max);
  auto [a, b] = r.interval("interval");
  r.finish();
  check_limits(limits, lam, n);
  MuntzSpace space(lam, n);
  auto basis = bernstein_basis(space, a, b);
  Json elems = Json::array();
  for (int k = 0; k <= n; ++k) {
    Json e = to_json(basis.elements[k]);
    e["k"] = k;
    elems.push_back(std::move(e));
  }
  return {{"partition", to_json(lam)},
          {"n", n},
          {"interval", {to_string(a), to_string(b)}},
          {"exponents", space.exponents()},
          {"basis", elems}};
}

Json eval_doc(const Json& req, const Limits& limits) {
  Reader r(req);
  Rational t = r.rational("t");
  MuntzCurve c = checked_curve(r, limits);
  return {{"t", rendered_json(t)},
          {"point", rendered_json(curve_eval(c, t))},
          {"derivative", rendered_json(curve_derivative(c, t))}};
}

Json sample_doc(const Json& req, const Limits& limits) {
  Reader r(req);
  int m = r.integer_or("m", 33, 2, limits.max_samples);
  MuntzCurve c = checked_curve(r, limits);
  Json samples = Json::array();
  for (const auto& [t, p] : sample_curve(c, m))
    samples.push_back({{"t", rendered_json(t)}, {"point", rendered_json(p)}});
  return {{"curve", to_json(c)}, {"samples", samples}};
}

Json elevate_doc(const Json& req, const Limits& limits) {
  Reader r(req);
  Partition eta = r.partition("eta");
  MuntzCurve c = checked_curve(r, limits);
  check_limits(limits, eta, c.space.n() + 1);
  auto w = elevation_weights(c, eta);
  MuntzCurve up = elevate(c, eta);
  return {{"curve", to_json(up)},
          {"points", points_json(up.points)},
          {"weights", {{"xi", rationals_json(w.xi)}, {"rho", rationals_json(w.rho)}}}};
}

Json join_doc(const Json& req, const Limits& limits) {
  Reader r(req);
  Partition mu = r.partition("mu");
  const bool by_rho = r.has("rho"), by_c = r.has("c");
  if (by_rho == by_c)
    r.error(by_rho ? "c" : "rho", "give exactly one of \"rho\" and \"c\"");
  Rational param = by_rho ? r.rational("rho") : by_c ? r.rational("c") : Rational(0);
  MuntzCurve left = checked_curve(r, limits);
  check_limits(limits, mu, left.space.n());
  const int n = left.space.n();
  const Point& pn = left.points[n];
  Rational c;
  Point q1;
  if (by_rho) {
    if (!mu.empty())
      fail(ErrorCode::InvalidInput, "solving for c from rho needs an empty right partition");
    c = join_c_for_rho(left, param);
    q1 = pn + Rational(1 / param) * (pn - left.points[n - 1]);
  } else {
    c = param;
    q1 = join_q1_for_c(left, mu, c);
  }
  auto fl = tangent_factors(left.space, left.a, left.b);
  auto fr = tangent_factors(MuntzSpace(mu, n), left.b, c);
  return {{"mode", by_rho ? "rho" : "c"},
          {"c", rendered_json(c)},
          {"q0", rendered_json(pn)},
          {"q1", rendered_json(q1)},
          {"tangent", rendered_json(fl.at_b * (pn - left.points[n - 1]))},
          {"factors", {{"left_at_b", rendered_json(fl.at_b)}, {"right_at_b", rendered_json(fr.at_a)}}}};
}

Json surface_doc(const Json& req, const Limits& limits) {
  Reader r(req);
  int m = r.integer_or("m", 9, 2, 101);
  TensorSurface s = read_surface(r);
  check_limits(limits, s.space_t.lambda(), s.space_t.n());
  check_limits(limits, s.space_s.lambda(), s.space_s.n());
  Json samples = Json::array();
  for (const auto& smp : sample_surface(s, m))
    samples.push_back({{"s", rendered_json(smp.s)},
                       {"t", rendered_json(smp.t)},
                       {"point", rendered_json(smp.point)}});
  return {{"m", m}, {"samples", samples}};
}

Json elevation_partitions_doc(const Json& req, const Limits& limits) {
  Reader r(req);
  Partition lam = r.partition("partition");
  int n = r.integer("n", 1, int_max);
  int r_max = r.integer_or("r_max", 1, 0, limits.max_order);
  r.finish();
  check_limits(limits, lam, n);
  if (lam.length() > n)
    fail(ErrorCode::LengthExceedsOrder, "partition longer than the order");
  Json list = Json::array();
  for (const auto& eta : dimension_elevation_partitions(lam, n, r_max))
    list.push_back(to_json(eta));
  return {{"partition", to_json(lam)},
          {"n", n},
          {"border_complement", to_json(border_complement(lam))},
          {"partitions", list}};
}

Response handle(std::string_view method, std::string_view path, std::string_view body,
                const Limits& limits) {
  using Op = Json (*)(const Json&, const Limits&);
  static const std::pair<std::string_view, Op> posts[] = {
      {"/v1/basis", basis_doc},
      {"/v1/eval", eval_doc},
      {"/v1/sample", sample_doc},
      {"/v1/elevate", elevate_doc},
      {"/v1/join", join_doc},
      {"/v1/surface", surface_doc},
      {"/v1/elevation-partitions", elevation_partitions_doc},
  };
  auto reply = [](int status, const Json& j) { return Response{status, j.dump() + "\n"}; };
  auto message = [&](int status, const std::string& msg) {
    return reply(status, Json{{"error", {{"code", "HttpError"}, {"message", msg}}}});
  };

  if (path == "/v1/health") {
    if (method != "GET")
      return message(405, "use GET");
    return {200, "ok", "text/plain"};
  }
  for (const auto& [route, op] : posts) {
    if (path != route)
      continue;
    if (method != "POST")
      return message(405, "use POST");
    try {
      return reply(200, op(parse_json(body), limits));
    } catch (const ValidationError& e) {
      return reply(400, error_json(e));
    } catch (const Error& e) {
      return reply(422, error_json(e));
    } catch (const std::exception& e) {
      return message(500, e.what());
    }
  }
  return message(404, "no such endpoint");
}

void install_routes(httplib::Server& server, const Limits& limits) {
  auto forward = [limits](const httplib::Request& req, httplib::Response& res) {
    Response r = handle(req.method, req.path, req.body, limits);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Get(R"(/v1/.*)", forward);
  server.Post(R"(/v1/.*)", forward);
  server.Put(R"(/v1/.*)", forward);
  server.Delete(R"(/v1/.*)", forward);
}

std::string default_bind() {
  const char* v = std::getenv("MUNTZ_BIND");
  return v && *v ? v : "127.0.0.1:8080";
}

bool serve(const std::string& bind, const Limits& limits) {
  auto colon = bind.rfind(':');
  if (colon == std::string::npos)
    fail(ErrorCode::InvalidInput, "bind address must be host:port");
  std::string host = bind.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(bind.substr(colon + 1));
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidInput, "bad port in bind address");
  }
  httplib::Server server;
  install_routes(server, limits);
  return server.listen(host, port);
}

} // namespace muntz
