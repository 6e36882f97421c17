#include "muntz/figures.hpp"
#include "muntz/render.hpp"
#include "muntz/service.hpp"

#include <doctest.h>
#include <httplib.h>

#include <thread>

using namespace muntz;

namespace {

const char* figure1_curve = R"({"partition": [1], "n": 3, "interval": ["1", "2"],
  "points": [[0, 0], [1, 3], [3, 3], [4, 0]]})";

Json post(const std::string& path, const Json& body, int expect = 200) {
  Response r = handle("POST", path, body.dump(), Limits{});
  CHECK(r.status == expect);
  return Json::parse(r.body);
}

Json curve_with(std::initializer_list<std::pair<const std::string, Json>> extra) {
  Json j = parse_json(figure1_curve);
  for (const auto& [k, v] : extra)
    j[k] = v;
  return j;
}

std::vector<std::string> fields(const Json& err) {
  std::vector<std::string> out;
  for (const auto& e : err["errors"])
    out.push_back(e["field"]);
  return out;
}

} // namespace

TEST_SUITE("cli_service") {

TEST_CASE("decimal input is exact") {
  Json j = parse_json(R"({"x": 0.1, "y": 1e-3, "z": 7, "w": "2/6"})");
  Reader r(j);
  CHECK(r.rational("x") == frac(1, 10));
  CHECK(r.rational("y") == frac(1, 1000));
  CHECK(r.rational("z") == 7);
  CHECK(r.rational("w") == frac(1, 3));
  r.finish();
  CHECK_THROWS_AS(parse_json("{\"x\": }"), ValidationError);
  CHECK(parse_json(R"({"big": 123456789012345678901234567890.5})")["big"] ==
        "123456789012345678901234567890.5");
}

TEST_CASE("field-level validation") {
  Json bad = parse_json(R"({"partition": [1, 2], "n": "three", "interval": [1],
                           "points": [[0, "x"], [1, 1]]})");
  Reader r(bad);
  CHECK_THROWS_AS(read_curve(r), ValidationError);
  try {
    Reader r2(bad);
    read_curve(r2);
  } catch (const ValidationError& e) {
    std::vector<std::string> f;
    for (const auto& fe : e.errors())
      f.push_back(fe.field);
    CHECK(f == std::vector<std::string>{"partition", "n", "interval", "points[0][1]"});
  }
}

TEST_CASE("health and routing") {
  Response h = handle("GET", "/v1/health", "", Limits{});
  CHECK(h.status == 200);
  CHECK(h.body == "ok");
  CHECK(handle("POST", "/v1/health", "", Limits{}).status == 405);
  CHECK(handle("GET", "/v1/basis", "", Limits{}).status == 405);
  CHECK(handle("POST", "/v1/nothing", "{}", Limits{}).status == 404);
  CHECK(handle("POST", "/v1/eval", "not json", Limits{}).status == 400);
}

TEST_CASE("basis endpoint") {
  Json out = post("/v1/basis", {{"partition", Json::array()}, {"n", 2}, {"interval", {0, 1}}});
  CHECK(out["exponents"] == Json({1, 2}));
  REQUIRE(out["basis"].size() == 3);
  CHECK(out["basis"][0]["text"] == "t^2 - 2 t + 1");
  CHECK(out["basis"][1]["text"] == "-2 t^2 + 2 t");
  CHECK(out["basis"][2]["terms"] == Json::parse(R"([{"exponent": 2, "coefficient": "1"}])"));
  Json err = post("/v1/basis", {{"partition", {1}}, {"n", 2}, {"interval", {0, 1}}}, 422);
  CHECK(err["error"]["code"] == "NonPositiveEndpoint");
  Json big = post("/v1/basis", {{"partition", {1}}, {"n", 13}, {"interval", {1, 2}}}, 422);
  CHECK(big["error"]["code"] == "LimitExceeded");
  Limits wide;
  wide.max_order = 20;
  CHECK(handle("POST", "/v1/basis",
               Json{{"partition", {1}}, {"n", 13}, {"interval", {1, 2}}}.dump(), wide)
            .status == 200);
}

TEST_CASE("eval endpoint") {
  Json at_a = post("/v1/eval", curve_with({{"t", "1"}}));
  CHECK(at_a["point"]["exact"] == Json({"0", "0"}));
  CHECK(at_a["point"]["decimal"] == Json({0.0, 0.0}));
  Json mid = post("/v1/eval", curve_with({{"t", 1.5}}));
  MuntzCurve c = read_curve(parse_json(figure1_curve));
  CHECK(mid["point"]["exact"] == exact_json(curve_eval(c, frac(3, 2))));
  CHECK(mid["derivative"]["exact"] == exact_json(curve_derivative(c, frac(3, 2))));
  Json err = post("/v1/eval", curve_with({{"t", -1}}), 422);
  CHECK(err["error"]["code"] == "NonPositiveArgument");
  Json missing = post("/v1/eval", parse_json(figure1_curve), 400);
  CHECK(fields(missing) == std::vector<std::string>{"t"});
}

TEST_CASE("sample round trip") {
  Json out = post("/v1/sample", curve_with({{"m", 5}}));
  MuntzCurve c = read_curve(out["curve"]);
  MuntzCurve orig = read_curve(parse_json(figure1_curve));
  CHECK(c.points == orig.points);
  auto expect = sample_curve(orig, 5);
  REQUIRE(out["samples"].size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    Json s = parse_json(out["samples"][i].dump());
    Point p;
    for (const auto& x : s["point"]["exact"])
      p.push_back(parse_rational(x.get<std::string>()));
    CHECK(p == expect[i].second);
    CHECK(parse_rational(s["t"]["exact"].get<std::string>()) == expect[i].first);
  }
  CHECK(post("/v1/sample", curve_with({{"m", 1}}), 400)["errors"][0]["field"] == "m");
}

TEST_CASE("elevate endpoint") {
  Json out = post("/v1/elevate", curve_with({{"eta", Json::array()}}));
  MuntzCurve up = read_curve(out["curve"]);
  MuntzCurve orig = read_curve(parse_json(figure1_curve));
  CHECK(up.space.n() == 4);
  CHECK(coordinate_polynomials(up) == coordinate_polynomials(orig));
  CHECK(out["weights"]["xi"].size() == 4);
  CHECK(out["weights"]["rho"][0]["exact"] == "2/5"); // kb/((n+1-k)a+kb), k=1
  CHECK(post("/v1/elevate", curve_with({{"eta", {2}}}), 422)["error"]["code"] ==
        "NotAnElevation");
}

TEST_CASE("join endpoint") {
  Json left = parse_json(R"({"partition": [1, 1], "n": 3, "interval": [1, 3],
    "points": [[0, 0], [1, 2], [3, 3], [4, 1]]})");
  Json a = left;
  a["mu"] = Json::array();
  a["rho"] = "1";
  Json out = post("/v1/join", a);
  MuntzCurve l = read_curve(left);
  CHECK(parse_rational(out["c"]["exact"].get<std::string>()) == join_c_elementary(l, 1));
  Json b = left;
  b["mu"] = {1, 1};
  b["c"] = 5;
  out = post("/v1/join", b);
  CHECK(out["q1"]["exact"] == exact_json(join_q1_for_c(l, Partition{1, 1}, 5)));
  b["rho"] = 1;
  CHECK(post("/v1/join", b, 400)["errors"].size() == 1);
  b.erase("rho");
  b["c"] = 2;
  CHECK(post("/v1/join", b, 422)["error"]["code"] == "DegenerateInterval");
}

TEST_CASE("surface endpoint") {
  Json s = parse_json(R"({"partition_t": [2, 1], "partition_s": [1, 1], "n": 2,
    "interval_t": [3, 4], "interval_s": [3, 4], "m": 2,
    "grid": [[[0,0,0],[0,1,0],[0,2,1]], [[1,0,0],[1,1,2],[1,2,0]], [[2,0,1],[2,1,0],[2,2,3]]]})");
  Json out = post("/v1/surface", s);
  REQUIRE(out["samples"].size() == 4);
  CHECK(out["samples"][0]["point"]["exact"] == Json({"0", "0", "0"}));
  CHECK(out["samples"][3]["point"]["exact"] == Json({"2", "2", "3"}));
  s["grid"].erase(0);
  CHECK(post("/v1/surface", s, 422)["error"]["code"] == "DimensionMismatch");
}

TEST_CASE("elevation partitions endpoint") {
  Json out = post("/v1/elevation-partitions", {{"partition", {1}}, {"n", 2}});
  CHECK(out["border_complement"] == Json::array());
  std::vector<Json> expect;
  for (const auto& p : dimension_elevation_partitions(Partition{1}, 2, 1))
    expect.push_back(to_json(p));
  CHECK(out["partitions"] == Json(expect));
  bool has_complement = false;
  for (const auto& p : out["partitions"])
    has_complement = has_complement || p == out["border_complement"];
  CHECK(has_complement);
}

TEST_CASE("stateless and deterministic") {
  std::string body = curve_with({{"m", 7}}).dump();
  Response r1 = handle("POST", "/v1/sample", body, Limits{});
  Response r2 = handle("POST", "/v1/sample", body, Limits{});
  CHECK(r1.body == r2.body);
  for (int id : figure_ids())
    CHECK(figure_svg(id) == figure_svg(id));
  CHECK_THROWS_AS(figure_svg(8), Error);
}

TEST_CASE("rendering helpers") {
  CHECK(to_fixed(frac(1, 3), 2) == "0.33");
  CHECK(to_fixed(frac(2, 3), 2) == "0.67");
  CHECK(to_fixed(frac(-1, 8), 2) == "-0.13");
  CHECK(to_fixed(frac(-1, 1000), 2) == "0.00");
  CHECK(to_fixed(Rational(42), 0) == "42");
  CHECK(to_fixed(frac(5, 2), 0) == "3");
  std::string csv = curve_samples_csv({{frac(1, 2), {frac(1, 3), Rational(2)}}});
  CHECK(csv == "t,x1,x2,t_exact,x1_exact,x2_exact\r\n0.5,0.3333333333333333,2,1/2,1/3,2\r\n");
  std::string svg = render_svg("a < b", {{"red", {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}, {}, "x"}});
  CHECK(svg.find("<title>a &lt; b</title>") != std::string::npos);
  CHECK_THROWS_AS(render_svg("", {{"red", {{Rational(0)}}, {}, ""}}), Error);
}

TEST_CASE("live socket") {
  httplib::Server server;
  install_routes(server, Limits{});
  int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client client("127.0.0.1", port);
  auto h = client.Get("/v1/health");
  REQUIRE(h);
  CHECK(h->status == 200);
  CHECK(h->body == "ok");
  auto e = client.Post("/v1/eval", curve_with({{"t", "2"}}).dump(), "application/json");
  REQUIRE(e);
  CHECK(e->status == 200);
  CHECK(Json::parse(e->body)["point"]["exact"] == Json({"4", "0"}));
  auto bad = client.Post("/v1/eval", "{}", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  server.stop();
  t.join();
}

} // TEST_SUITE
