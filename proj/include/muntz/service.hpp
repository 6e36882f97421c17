#pragma once

#include "muntz/json_io.hpp"

#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace muntz {

/// Size guards applied to every request.
struct Limits {
  int max_order = 12;
  int max_weight = 40;
  int max_samples = 2001;

  /// Reads MUNTZ_MAX_ORDER and MUNTZ_MAX_WEIGHT when set.
  static Limits from_env();
};

/// Throws Error(LimitExceeded).
void check_limits(const Limits& limits, const Partition& lambda, int n);

// Document operations shared by the HTTP routes and the command line. Each
// takes a parsed request body and returns the response body; they throw
// ValidationError for malformed input and Error for domain violations.
Json basis_doc(const Json& req, const Limits& limits);
Json eval_doc(const Json& req, const Limits& limits);
Json sample_doc(const Json& req, const Limits& limits);
Json elevate_doc(const Json& req, const Limits& limits);
Json join_doc(const Json& req, const Limits& limits);
Json surface_doc(const Json& req, const Limits& limits);
Json elevation_partitions_doc(const Json& req, const Limits& limits);

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Routes /v1 requests. Never throws.
Response handle(std::string_view method, std::string_view path, std::string_view body,
                const Limits& limits);

/// Registers every /v1 route on the server.
void install_routes(httplib::Server& server, const Limits& limits);

/// "host:port"; falls back to MUNTZ_BIND, then 127.0.0.1:8080.
std::string default_bind();

/// Blocks until the listener stops. Returns false if binding failed.
bool serve(const std::string& bind, const Limits& limits);

} // namespace muntz
