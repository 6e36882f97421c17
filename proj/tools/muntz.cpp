// Command-line front end for the Muntz space kernel.

#include "muntz/casteljau.hpp"
#include "muntz/figures.hpp"
#include "muntz/render.hpp"
#include "muntz/service.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace muntz;

namespace {

// Accepts "(2,1)", "2,1", "4^3,1", and "()", "0", "empty" for the empty partition.
Partition parse_partition(std::string text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ' && c != '[' && c != ']')
      s += c;
  if (s.empty() || s == "0" || s == "empty" || s == "\xE2\x88\x85")
    return {};
  std::vector<int> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto caret = item.find('^');
    try {
      std::size_t used = 0;
      int part = std::stoi(item.substr(0, caret), &used);
      int times = 1;
      if (used != item.substr(0, caret).size())
        throw std::invalid_argument(item);
      if (caret != std::string::npos) {
        times = std::stoi(item.substr(caret + 1), &used);
        if (used != item.size() - caret - 1 || times < 0 || times > 10000)
          throw std::invalid_argument(item);
      }
      parts.insert(parts.end(), times, part);
    } catch (const std::logic_error&) {
      throw ValidationError("partition", "cannot read \"" + text + "\"");
    }
  }
  try {
    return Partition(parts);
  } catch (const Error& e) {
    throw ValidationError("partition", e.what());
  }
}

Rational arg_rational(const std::string& field, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw ValidationError(field, "not a rational: \"" + text + "\"");
  }
}

std::vector<Rational> arg_rationals(const std::string& field, const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs)
    out.push_back(arg_rational(field, x));
  return out;
}

Json read_document(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw ValidationError("file", "cannot open " + path);
    buf << in.rdbuf();
  }
  return parse_json(buf.str());
}

std::string join_rationals(const std::vector<Rational>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? ", " : "") + to_string(xs[i]);
  return out + ")";
}

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

enum class Format { Text, Json, Csv, Svg };

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Muntz spaces: Schur functions, blossoms, Bernstein bases and curves"};
  app.require_subcommand(1);
  Limits limits = Limits::from_env();

  std::string lam_s, curve_path, eta_s, mu_s, rho_s, c_s, bind = default_bind();
  int n = 0, k = 0, m = 33, figure = 0, r_max = 1;
  std::vector<std::string> args;
  std::string a_s, b_s, t_s;
  std::vector<std::string> ts;
  bool json = false, csv = false, svg = false;

  auto* schur_cmd = app.add_subcommand("schur", "Evaluate a Schur function exactly");
  schur_cmd->add_option("partition", lam_s)->required();
  schur_cmd->add_option("args", args, "Arguments (p/q, integers or decimals)");

  auto* blossom_cmd = app.add_subcommand("blossom", "Blossom by formula and by linear system");
  blossom_cmd->add_option("partition", lam_s)->required();
  blossom_cmd->add_option("n", n)->required();
  blossom_cmd->add_option("u", args)->required();

  auto* basis_cmd = app.add_subcommand("basis", "Bernstein basis polynomials");
  basis_cmd->add_option("partition", lam_s)->required();
  basis_cmd->add_option("n", n)->required();
  basis_cmd->add_option("a", a_s)->required();
  basis_cmd->add_option("b", b_s)->required();
  basis_cmd->add_flag("--json", json);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a curve and its derivative");
  eval_cmd->add_option("curve", curve_path, "Curve JSON file, - for stdin")->required();
  eval_cmd->add_option("-t", ts, "Parameter values")->required();
  eval_cmd->add_flag("--json", json);
  eval_cmd->add_flag("--csv", csv);

  auto* sample_cmd = app.add_subcommand("sample", "Sample a curve uniformly");
  sample_cmd->add_option("curve", curve_path)->required();
  sample_cmd->add_option("-m", m, "Sample count")->check(CLI::Range(2, 100000));
  sample_cmd->add_flag("--json", json);
  sample_cmd->add_flag("--csv", csv);
  sample_cmd->add_flag("--svg", svg);

  auto* elevate_cmd = app.add_subcommand("elevate", "Elevate a curve to a larger space");
  elevate_cmd->add_option("curve", curve_path)->required();
  elevate_cmd->add_option("eta", eta_s)->required();

  auto* join_cmd = app.add_subcommand("join", "C1 continuation of a curve at its end point");
  join_cmd->add_option("left", curve_path)->required();
  join_cmd->add_option("--mu", mu_s, "Right partition")->default_val("()");
  auto* rho_opt = join_cmd->add_option("--rho", rho_s, "Solve for c given (Pn-Pn-1) = rho (Q1-Q0)");
  auto* c_opt = join_cmd->add_option("--c", c_s, "Solve for Q1 given the right end c");
  rho_opt->excludes(c_opt);

  auto* surface_cmd = app.add_subcommand("surface", "Sample a tensor-product surface");
  surface_cmd->add_option("surface", curve_path)->required();
  surface_cmd->add_option("-m", m)->default_val(9)->check(CLI::Range(2, 1000));
  surface_cmd->add_flag("--json", json);

  auto* paths_cmd = app.add_subcommand("paths", "Weighted de Casteljau paths");
  paths_cmd->add_option("partition", lam_s)->required();
  paths_cmd->add_option("n", n)->required();
  paths_cmd->add_option("k", k)->required();
  paths_cmd->add_option("a", a_s)->required();
  paths_cmd->add_option("b", b_s)->required();
  paths_cmd->add_option("t", t_s)->required();

  auto* figures_cmd = app.add_subcommand("figures", "Demo scenes as SVG");
  figures_cmd->add_option("id", figure)->required();

  auto* elev_parts_cmd =
      app.add_subcommand("elevation-partitions", "Partitions eta with E_lambda(n) in E_eta(n+1)");
  elev_parts_cmd->add_option("partition", lam_s)->required();
  elev_parts_cmd->add_option("n", n)->required();
  elev_parts_cmd->add_option("--r-max", r_max)->check(CLI::Range(0, 64));

  auto* serve_cmd = app.add_subcommand("serve", "Run the /v1 JSON service");
  serve_cmd->add_option("--bind", bind, "host:port (default MUNTZ_BIND or 127.0.0.1:8080)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json({{"argv", e.what()}}).dump() << '\n';
    return 2;
  }

  try {
    if (*schur_cmd) {
      Partition lam = parse_partition(lam_s);
      std::cout << to_string(schur(lam, ArgMultiset(arg_rationals("args", args)))) << '\n';
    } else if (*blossom_cmd) {
      Partition lam = parse_partition(lam_s);
      check_limits(limits, lam, n);
      MuntzSpace space(lam, n);
      auto u = arg_rationals("u", args);
      std::cout << "formula: " << join_rationals(blossom(space, u)) << '\n';
      try {
        std::cout << "oracle:  " << join_rationals(blossom_oracle(space, u)) << '\n';
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RepeatedArguments)
          throw;
        std::cout << "oracle:  n/a (repeated arguments)\n";
      }
    } else if (*basis_cmd) {
      Partition lam = parse_partition(lam_s);
      Json req{{"partition", to_json(lam)}, {"n", n}, {"interval", {a_s, b_s}}};
      Json doc = basis_doc(req, limits);
      if (json) {
        print_json(doc);
      } else {
        std::cout << "space E" << to_string(lam) << "(" << n << ") = span(1";
        for (int e : doc["exponents"])
          std::cout << ", t" << (e == 1 ? "" : "^" + std::to_string(e));
        std::cout << ") on [" << doc["interval"][0].get<std::string>() << ", "
                  << doc["interval"][1].get<std::string>() << "]\n";
        for (const auto& e : doc["basis"])
          std::cout << "B_" << e["k"].get<int>() << " = " << e["text"].get<std::string>() << '\n';
      }
    } else if (*eval_cmd) {
      Json doc = read_document(curve_path);
      Reader r(doc);
      MuntzCurve c = read_curve(r);
      check_limits(limits, c.space.lambda(), c.space.n());
      auto tv = arg_rationals("t", ts);
      if (csv) {
        std::vector<std::pair<Rational, Point>> rows;
        for (const auto& t : tv)
          rows.emplace_back(t, curve_eval(c, t));
        std::cout << curve_samples_csv(rows);
      } else {
        Json out = Json::array();
        for (const auto& t : tv)
          out.push_back({{"t", rendered_json(t)},
                         {"point", rendered_json(curve_eval(c, t))},
                         {"derivative", rendered_json(curve_derivative(c, t))}});
        print_json(out);
      }
    } else if (*sample_cmd) {
      Json doc = read_document(curve_path);
      Reader r(doc);
      MuntzCurve c = read_curve(r);
      check_limits(limits, c.space.lambda(), c.space.n());
      auto samples = sample_curve(c, m);
      if (svg) {
        std::vector<Point> pts;
        for (const auto& s : samples)
          pts.push_back(s.second);
        std::cout << render_svg("curve in E" + to_string(c.space.lambda()) + "(" +
                                    std::to_string(c.space.n()) + ")",
                                {{"black", c.points, {}, "control polygon"},
                                 {"blue", {}, pts, "curve"}});
      } else if (json) {
        Json out = Json::array();
        for (const auto& [t, p] : samples)
          out.push_back({{"t", rendered_json(t)}, {"point", rendered_json(p)}});
        print_json({{"curve", to_json(c)}, {"samples", out}});
      } else {
        std::cout << curve_samples_csv(samples);
      }
    } else if (*elevate_cmd) {
      Json req = read_document(curve_path);
      if (req.is_object())
        req["eta"] = to_json(parse_partition(eta_s));
      print_json(elevate_doc(req, limits));
    } else if (*join_cmd) {
      if (!*rho_opt && !*c_opt)
        throw ValidationError("argv", "give one of --rho and --c");
      Json req = read_document(curve_path);
      if (req.is_object()) {
        req["mu"] = to_json(parse_partition(mu_s));
        if (*rho_opt)
          req["rho"] = rho_s;
        else
          req["c"] = c_s;
      }
      print_json(join_doc(req, limits));
    } else if (*surface_cmd) {
      Json req = read_document(curve_path);
      Reader r(req);
      TensorSurface s = read_surface(r);
      check_limits(limits, s.space_t.lambda(), s.space_t.n());
      check_limits(limits, s.space_s.lambda(), s.space_s.n());
      if (json) {
        if (req.is_object())
          req["m"] = m;
        print_json(surface_doc(req, limits));
      } else {
        std::cout << surface_samples_csv(sample_surface(s, m));
      }
    } else if (*paths_cmd) {
      Partition lam = parse_partition(lam_s);
      check_limits(limits, lam, n);
      MuntzSpace space(lam, n);
      Rational a = arg_rational("a", a_s), b = arg_rational("b", b_s), t = arg_rational("t", t_s);
      Rational sum = 0;
      for (const auto& p : enumerate_paths(n, k)) {
        std::string line;
        for (const auto& s : p.sets)
          line += (line.empty() ? "" : " -> ") + set_string(s);
        Rational w = path_weight(space, a, b, t, p);
        sum += w;
        std::cout << line << " : " << to_string(w) << '\n';
      }
      std::cout << "sum = " << to_string(sum) << '\n';
      std::cout << "B_" << k << "(t) = " << to_string(bernstein_basis(space, a, b).elements[k](t))
                << '\n';
    } else if (*figures_cmd) {
      std::cout << figure_svg(figure);
    } else if (*elev_parts_cmd) {
      Json req{{"partition", to_json(parse_partition(lam_s))}, {"n", n}, {"r_max", r_max}};
      Json doc = elevation_partitions_doc(req, limits);
      for (const auto& p : doc["partitions"])
        std::cout << to_string(Partition(p.get<std::vector<int>>())) << '\n';
    } else if (*serve_cmd) {
      std::cerr << "listening on " << bind << '\n';
      if (!serve(bind, limits)) {
        std::cerr << error_json(Error(ErrorCode::InvalidInput, "cannot bind " + bind)).dump()
                  << '\n';
        return 2;
      }
    }
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << '\n';
    return 2;
  }
  return 0;
}
