#include "gwa/render.hpp"

#include <algorithm>
#include <sstream>

#include "gwa/simples.hpp"
#include "gwa/textio.hpp"

namespace gwa {

namespace {

// Points on the coordinate line for one window, in drawing order. In the
// generic case m is placed between 0 and 1 by convention.
std::vector<Coordinate> line_points(const GWAParameters& params, long lo, long hi) {
  std::vector<Coordinate> points;
  for (long n = lo; n <= hi; ++n) {
    points.push_back(Coordinate::integer(n));
    if (params.noncongruent()) points.push_back(Coordinate::integer(n) + params.m());
  }
  if (params.root_case() == RootCase::half_integer) {
    std::sort(points.begin(), points.end(),
              [](const Coordinate& a, const Coordinate& b) { return a.rat() < b.rat(); });
    points.erase(std::unique(points.begin(), points.end()), points.end());
  }
  return points;
}

std::string ascii_figure(const GWAParameters& params, long lo, long hi) {
  std::vector<Coordinate> points = line_points(params, lo, hi);
  std::vector<std::string> labels;
  size_t width = 0;
  for (const Coordinate& c : points) {
    labels.push_back(to_string(c));
    width = std::max(width, labels.back().size());
  }
  width += 2;

  auto cell = [&](const std::string& s) {
    std::string out(width - s.size(), ' ');
    return out + s;
  };

  std::ostringstream out;
  bool tripled = params.root_case() == RootCase::congruent;
  out << "   ";
  for (const std::string& l : labels) out << cell(l);
  out << "\n";
  auto dot_row = [&](const std::string& tag) {
    out << tag;
    for (size_t i = 0; i < points.size(); ++i) out << cell("*");
    out << "\n";
  };
  dot_row(params.noncongruent() ? "X  " : "X  ");
  if (tripled) dot_row("Z  ");
  out << "---";
  for (size_t i = 0; i < points.size(); ++i) {
    std::string tick(width - 1, '-');
    out << tick << "+";
  }
  out << "-->\n";
  dot_row("Y  ");
  return out.str();
}

std::string ascii_annotation(const GWAParameters& params, const PicardElement& g, long lo,
                             long hi) {
  std::ostringstream out;
  out << "action of " << to_string(g) << ":\n";
  for (const Coordinate& c : line_points(params, lo, hi)) {
    SimpleModule sx = x_type_at(params, c);
    SimpleModule image = act_on_simple(g, sx);
    out << "  " << to_string(sx) << " -> " << to_string(image) << "\n";
  }
  return out.str();
}

std::string svg_figure(const GWAParameters& params, long lo, long hi,
                       const std::optional<PicardElement>& annotate) {
  std::vector<Coordinate> points = line_points(params, lo, hi);
  const int x0 = 40, step = 60, cy = 90;
  const int width = x0 * 2 + step * static_cast<int>(points.size() - 1);

  auto xpos = [&](const Coordinate& c) {
    auto it = std::find(points.begin(), points.end(), c);
    return x0 + step * static_cast<int>(it - points.begin());
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"180\" viewBox=\"0 0 " << width << " 180\">\n";
  out << "  <line x1=\"10\" y1=\"" << cy << "\" x2=\"" << width - 10 << "\" y2=\"" << cy
      << "\" stroke=\"black\"/>\n";
  bool tripled = params.root_case() == RootCase::congruent;
  for (const Coordinate& c : points) {
    int x = xpos(c);
    out << "  <circle cx=\"" << x << "\" cy=\"" << cy - 12 << "\" r=\"3\"/>\n";
    if (tripled) out << "  <circle cx=\"" << x << "\" cy=\"" << cy << "\" r=\"3\"/>\n";
    out << "  <circle cx=\"" << x << "\" cy=\"" << cy + 12 << "\" r=\"3\"/>\n";
    out << "  <text x=\"" << x << "\" y=\"" << cy + 36
        << "\" text-anchor=\"middle\" font-size=\"11\">" << to_string(c) << "</text>\n";
  }
  if (annotate) {
    for (const Coordinate& c : points) {
      Coordinate image = annotate->apply(c);
      auto it = std::find(points.begin(), points.end(), image);
      if (it == points.end()) continue;
      int xa = xpos(c), xb = xpos(image);
      int mid = (xa + xb) / 2;
      out << "  <path d=\"M " << xa << " " << cy - 20 << " Q " << mid << " " << cy - 56 << " "
          << xb << " " << cy - 20 << "\" fill=\"none\" stroke=\"gray\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_simples(const GWAParameters& params, long window_lo, long window_hi,
                           const std::string& format,
                           const std::optional<PicardElement>& annotate) {
  if (format == "svg") return svg_figure(params, window_lo, window_hi, annotate);
  if (format != "ascii") throw domain_error("render format must be ascii or svg");
  std::string out = ascii_figure(params, window_lo, window_hi);
  if (annotate) out += ascii_annotation(params, *annotate, window_lo, window_hi);
  return out;
}

}  // namespace gwa
