#include "muntz/figures.hpp"

#include "muntz/error.hpp"
#include "muntz/render.hpp"

namespace muntz {

namespace {

constexpr int samples = 65;

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

std::vector<Point> quartic_polygon() { return {pt(0, 0), pt(1, 3), pt(3, 3), pt(4, 0)}; }

std::vector<Point> curve_points(const MuntzCurve& c) {
  std::vector<Point> out;
  for (auto& [t, p] : sample_curve(c, samples))
    out.push_back(std::move(p));
  return out;
}

std::string label(const MuntzCurve& c) {
  return "E" + to_string(c.space.lambda()) + "(" + std::to_string(c.space.n()) + ") on [" +
         to_string(c.a) + ", " + to_string(c.b) + "]";
}

std::string elevation_figure(int id, const Partition& lam, const Partition& eta) {
  auto c = make_curve(lam, 3, Rational(1), Rational(2), quartic_polygon());
  auto up = elevate(c, eta);
  return render_svg("Figure " + std::to_string(id) + ": dimension elevation",
                    {{"black", c.points, {}, "P: " + label(c)},
                     {"red", up.points, {}, "elevated: " + label(up)},
                     {"blue", {}, curve_points(c), "curve"}});
}

std::string family_figure(int id, const std::vector<Partition>& family) {
  static const char* colors[] = {"black", "red", "green", "blue"};
  std::vector<SvgLayer> layers{{"gray", quartic_polygon(), {}, "control polygon"}};
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto c = make_curve(family[i], 3, Rational(1), Rational(4), quartic_polygon());
    layers.push_back({colors[i % 4], {}, curve_points(c), label(c)});
  }
  return render_svg("Figure " + std::to_string(id) + ": partition as a shape parameter", layers);
}

// Oblique projection of the iso-parameter lines of a tensor surface.
void surface_layers(std::vector<SvgLayer>& layers, const TensorSurface& s, const std::string& color,
                    const std::string& text) {
  const int m = 9;
  auto samples_grid = sample_surface(s, m);
  auto project = [](const Point& p) {
    return Point{p[0] + p[1] * frac(1, 2), p[2] + p[1] * frac(1, 3)};
  };
  for (int i = 0; i < m; ++i) {
    std::vector<Point> along_s, along_t;
    for (int j = 0; j < m; ++j) {
      along_s.push_back(project(samples_grid[i * m + j].point));
      along_t.push_back(project(samples_grid[j * m + i].point));
    }
    layers.push_back({color, {}, std::move(along_s), i == 0 ? text : ""});
    layers.push_back({color, {}, std::move(along_t), ""});
  }
}

std::string surface_figure() {
  static const long heights[4][4] = {{0, 1, 1, 0}, {1, 3, 3, 1}, {1, 3, 3, 1}, {0, 1, 1, 0}};
  auto grid_at = [&](long dx) {
    std::vector<std::vector<Point>> g(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        g[i].push_back({Rational(i + dx), Rational(j), Rational(heights[i][j])});
    return g;
  };
  std::vector<SvgLayer> layers;
  surface_layers(layers,
                 make_surface(Partition{2, 1}, Partition{1, 1}, 3, Rational(3), Rational(4),
                              Rational(3), Rational(4), grid_at(0)),
                 "gray", "(2,1) x (1,1) on [3,4] x [3,4]");
  surface_layers(layers,
                 make_surface(Partition{5, 1}, Partition{5, 1}, 3, Rational(1), Rational(6),
                              Rational(1), Rational(6), grid_at(5)),
                 "blue", "(5,1) x (5,1) on [1,6] x [1,6]");
  return render_svg("Figure 5: tensor-product surfaces", layers);
}

std::string join_figure(int id, const MuntzCurve& left, const MuntzCurve& right) {
  return render_svg("Figure " + std::to_string(id) + ": C1 join at P" +
                        std::to_string(left.space.n()),
                    {{"black", left.points, curve_points(left), "left: " + label(left)},
                     {"red", right.points, curve_points(right), "right: " + label(right)}});
}

} // namespace

std::vector<int> figure_ids() { return {1, 2, 3, 4, 5, 6, 7}; }

std::string figure_svg(int id) {
  switch (id) {
  case 1:
    return elevation_figure(1, Partition{1}, Partition{});
  case 2:
    return elevation_figure(2, Partition{2}, Partition{1});
  case 3:
    return family_figure(3, {Partition{2, 1}, Partition{3, 1}, Partition{4, 1}, Partition{5, 1}});
  case 4:
    return family_figure(
        4, {Partition{2, 1}, Partition{3, 2, 1}, Partition{4, 3, 2}, Partition{5, 4, 3}});
  case 5:
    return surface_figure();
  case 6: {
    auto left = make_curve(Partition{1, 1}, 3, Rational(1), Rational(3),
                           {pt(0, 0), pt(1, 2), pt(3, 3), pt(4, 1)});
    Rational rho = 1;
    Rational c = join_c_elementary(left, rho);
    const auto& P = left.points;
    Point q1 = P[3] + Rational(1 / rho) * (P[3] - P[2]);
    auto right = make_curve(Partition{}, 3, left.b, c, {P[3], q1, pt(7, 0), pt(8, 2)});
    return join_figure(6, left, right);
  }
  case 7: {
    auto left = make_curve(Partition{2, 1}, 3, Rational(1), Rational(3),
                           {pt(0, 0), pt(1, 3), pt(3, 4), pt(4, 2)});
    Rational c = 5;
    Point q1 = join_q1_for_c(left, Partition{1, 1}, c);
    auto right = make_curve(Partition{1, 1}, 3, left.b, c,
                            {left.points[3], q1, pt(8, 1), pt(9, 3)});
    return join_figure(7, left, right);
  }
  default:
    fail(ErrorCode::InvalidInput, "no figure " + std::to_string(id));
  }
}

} // namespace muntz
