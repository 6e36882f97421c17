#include "muntz/render.hpp"

#include "muntz/error.hpp"

#include <algorithm>
#include <sstream>

namespace muntz {

namespace {

constexpr int width = 640;
constexpr int height = 480;
constexpr int margin = 40;
constexpr int precision = 2;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string xml_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

} // namespace

std::string to_fixed(const Rational& q, int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale;
  BigInt r = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
  std::string s = r.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return (q < 0 && r != 0 ? "-" : "") + s;
}

std::string curve_samples_csv(const std::vector<std::pair<Rational, Point>>& samples) {
  std::ostringstream out;
  const std::size_t d = samples.empty() ? 0 : samples[0].second.size();
  out << "t";
  for (std::size_t i = 1; i <= d; ++i)
    out << ",x" << i;
  out << ",t_exact";
  for (std::size_t i = 1; i <= d; ++i)
    out << ",x" << i << "_exact";
  out << "\r\n";
  for (const auto& [t, p] : samples) {
    out << to_decimal(t);
    for (const auto& x : p)
      out << ',' << to_decimal(x);
    out << ',' << csv_field(to_string(t));
    for (const auto& x : p)
      out << ',' << csv_field(to_string(x));
    out << "\r\n";
  }
  return out.str();
}

std::string surface_samples_csv(const std::vector<SurfaceSample>& samples) {
  std::ostringstream out;
  const std::size_t d = samples.empty() ? 0 : samples[0].point.size();
  out << "s,t";
  for (std::size_t i = 1; i <= d; ++i)
    out << ",x" << i;
  out << "\r\n";
  for (const auto& smp : samples) {
    out << to_decimal(smp.s) << ',' << to_decimal(smp.t);
    for (const auto& x : smp.point)
      out << ',' << to_decimal(x);
    out << "\r\n";
  }
  return out.str();
}

std::string render_svg(const std::string& title, const std::vector<SvgLayer>& layers) {
  std::vector<const Point*> all;
  for (const auto& l : layers) {
    for (const auto& p : l.polygon)
      all.push_back(&p);
    for (const auto& p : l.curve)
      all.push_back(&p);
  }
  for (const Point* p : all)
    if (p->size() < 2)
      fail(ErrorCode::DimensionMismatch, "SVG output needs planar points");
  Rational xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!all.empty()) {
    xmin = xmax = (*all[0])[0];
    ymin = ymax = (*all[0])[1];
    for (const Point* p : all) {
      xmin = std::min(xmin, (*p)[0]);
      xmax = std::max(xmax, (*p)[0]);
      ymin = std::min(ymin, (*p)[1]);
      ymax = std::max(ymax, (*p)[1]);
    }
  }
  if (xmax == xmin)
    xmax = xmin + 1;
  if (ymax == ymin)
    ymax = ymin + 1;
  int labels = 0;
  for (const auto& l : layers)
    labels += !l.label.empty();
  const int top = margin + 16 * labels; // legend lines sit above the plot
  const int plot_w = width - 2 * margin, plot_h = height - top - margin;
  // one scale for both axes so shapes are not distorted
  Rational s = std::min(Rational(plot_w) / (xmax - xmin), Rational(plot_h) / (ymax - ymin));
  Rational ox = margin + (Rational(plot_w) - s * (xmax - xmin)) / 2;
  Rational oy = margin + (Rational(plot_h) - s * (ymax - ymin)) / 2;
  auto X = [&](const Point& p) { return to_fixed(ox + s * (p[0] - xmin), precision); };
  auto Y = [&](const Point& p) {
    return to_fixed(Rational(height) - oy - s * (p[1] - ymin), precision);
  };
  auto coords = [&](const std::vector<Point>& pts) {
    std::string out;
    for (const auto& p : pts) {
      if (!out.empty())
        out += ' ';
      out += X(p) + ',' + Y(p);
    }
    return out;
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<title>" << xml_text(title) << "</title>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  int legend = 0;
  for (const auto& l : layers) {
    if (!l.polygon.empty()) {
      out << "<polyline fill=\"none\" stroke=\"" << l.color
          << "\" stroke-width=\"1\" stroke-dasharray=\"4 3\" points=\"" << coords(l.polygon)
          << "\"/>\n";
      for (const auto& p : l.polygon)
        out << "<circle cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\"3\" fill=\"" << l.color
            << "\"/>\n";
    }
    if (!l.curve.empty())
      out << "<polyline fill=\"none\" stroke=\"" << l.color
          << "\" stroke-width=\"2\" points=\"" << coords(l.curve) << "\"/>\n";
    if (!l.label.empty())
      out << "<text x=\"" << margin << "\" y=\"" << 20 + 16 * legend++
          << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << l.color << "\">"
          << xml_text(l.label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace muntz
