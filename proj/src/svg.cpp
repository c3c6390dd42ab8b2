#include "porism/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace porism {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s = buf;
  return s == "-0.0000" ? "0.0000" : s;
}

const std::array<const char*, 4> kChainColors{"#c0392b", "#2471a3", "#1e8449", "#7d3c98"};

struct Box {
  double x0, y0, x1, y1;
};

std::string pivot_label(std::size_t i, std::size_t n) {
  if (n == 4) return std::string(1, "pqrs"[i]);
  return "p" + std::to_string(i + 1);
}

// Clip a line to the box; false if it misses.
bool clip(const Line2& l, const Box& b, Point2& u, Point2& v) {
  std::vector<Point2> hits;
  auto add = [&](Point2 p) {
    if (p.x >= b.x0 - 1e-12 && p.x <= b.x1 + 1e-12 && p.y >= b.y0 - 1e-12 && p.y <= b.y1 + 1e-12)
      hits.push_back(p);
  };
  if (std::abs(l.b()) > 1e-15) {
    for (double x : {b.x0, b.x1}) add({x, -(l.a() * x + l.c()) / l.b()});
  }
  if (std::abs(l.a()) > 1e-15) {
    for (double y : {b.y0, b.y1}) add({-(l.b() * y + l.c()) / l.a(), y});
  }
  if (hits.size() < 2) return false;
  u = hits.front();
  v = hits.front();
  for (Point2 h : hits)
    if (distance(h, u) > distance(v, u)) v = h;
  return true;
}

void header(std::ostringstream& os, const Box& b) {
  const double w = b.x1 - b.x0, h = b.y1 - b.y0;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(b.x0) << " " << fmt(-b.y1)
     << " " << fmt(w) << " " << fmt(h) << "\" width=\"" << fmt(600.0 * w / std::max(w, h))
     << "\" height=\"" << fmt(600.0 * h / std::max(w, h)) << "\">\n";
  os << "<rect x=\"" << fmt(b.x0) << "\" y=\"" << fmt(-b.y1) << "\" width=\"" << fmt(w)
     << "\" height=\"" << fmt(h) << "\" fill=\"white\"/>\n";
}

void polyline(std::ostringstream& os, const std::vector<Point2>& pts, const char* color,
              double stroke) {
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << fmt(stroke)
     << "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << " ";
    os << fmt(pts[i].x) << "," << fmt(-pts[i].y);
  }
  os << "\"/>\n";
}

void dot_with_label(std::ostringstream& os, Point2 p, const std::string& label, double size) {
  os << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(-p.y) << "\" r=\"" << fmt(0.4 * size)
     << "\" fill=\"black\"/>\n";
  os << "<text x=\"" << fmt(p.x + 0.6 * size) << "\" y=\"" << fmt(-p.y - 0.6 * size)
     << "\" font-size=\"" << fmt(3.0 * size) << "\" font-family=\"serif\" font-style=\"italic\">"
     << label << "</text>\n";
}

void verdict(std::ostringstream& os, const Box& b, const std::string& text, double size) {
  if (text.empty()) return;
  os << "<text x=\"" << fmt(b.x0 + 1.5 * size) << "\" y=\"" << fmt(-b.y0 - 1.5 * size)
     << "\" font-size=\"" << fmt(3.0 * size) << "\" font-family=\"sans-serif\">" << text
     << "</text>\n";
}

Box padded(Box b) {
  const double px = 0.1 * (b.x1 - b.x0), py = 0.1 * (b.y1 - b.y0);
  return {b.x0 - px, b.y0 - py, b.x1 + px, b.y1 + py};
}

std::string render_circle(const Scene& s, const Figure& f) {
  const Circle& c = s.circle;
  Box b{c.center.x - c.radius, c.center.y - c.radius, c.center.x + c.radius, c.center.y + c.radius};
  for (Point2 p : s.pivots) {
    b = {std::min(b.x0, p.x), std::min(b.y0, p.y), std::max(b.x1, p.x), std::max(b.y1, p.y)};
  }
  b = padded(b);
  const double unit = 0.01 * std::max(b.x1 - b.x0, b.y1 - b.y0);

  std::ostringstream os;
  header(os, b);
  os << "<circle cx=\"" << fmt(c.center.x) << "\" cy=\"" << fmt(-c.center.y) << "\" r=\""
     << fmt(c.radius) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(0.3 * unit)
     << "\"/>\n";
  Point2 u, v;
  if (s.line && clip(*s.line, b, u, v)) {
    os << "<line x1=\"" << fmt(u.x) << "\" y1=\"" << fmt(-u.y) << "\" x2=\"" << fmt(v.x)
       << "\" y2=\"" << fmt(-v.y) << "\" stroke=\"gray\" stroke-width=\"" << fmt(0.2 * unit)
       << "\"/>\n";
  }
  for (std::size_t i = 0; i < f.chains.size(); ++i) {
    polyline(os, f.chains[i], kChainColors[i % kChainColors.size()], 0.3 * unit);
  }
  for (std::size_t i = 0; i < s.pivots.size(); ++i) {
    dot_with_label(os, s.pivots[i], pivot_label(i, s.pivots.size()), unit);
  }
  verdict(os, b, f.verdict, unit);
  os << "</svg>\n";
  return os.str();
}

std::string render_sphere(const Scene& s, const Figure& f) {
  // two unit disks: xy view centered at (0,0), xz view centered at (2.5,0)
  constexpr double kShift = 2.5;
  const Box b = padded({-1.0, -1.0, 1.0 + kShift, 1.0});
  const double unit = 0.01 * std::max(b.x1 - b.x0, b.y1 - b.y0);
  std::ostringstream os;
  header(os, b);
  for (double cx : {0.0, kShift}) {
    os << "<circle cx=\"" << fmt(cx) << "\" cy=\"0.0000\" r=\"1.0000\" fill=\"none\" "
       << "stroke=\"black\" stroke-width=\"" << fmt(0.3 * unit) << "\"/>\n";
  }
  auto xy = [](Point3 p) { return Point2{p.x, p.y}; };
  auto xz = [&](Point3 p) { return Point2{p.x + kShift, p.z}; };
  for (std::size_t i = 0; i < f.sphere_chains.size(); ++i) {
    std::vector<Point2> a, c;
    for (Point3 p : f.sphere_chains[i]) {
      a.push_back(xy(p));
      c.push_back(xz(p));
    }
    polyline(os, a, kChainColors[i % kChainColors.size()], 0.3 * unit);
    polyline(os, c, kChainColors[i % kChainColors.size()], 0.3 * unit);
  }
  for (std::size_t i = 0; i < s.sphere_pivots.size(); ++i) {
    const std::string label = "p" + std::to_string(i + 1);
    dot_with_label(os, xy(s.sphere_pivots[i]), label, unit);
    dot_with_label(os, xz(s.sphere_pivots[i]), label, unit);
  }
  verdict(os, b, f.verdict, unit);
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const Scene& scene, const Figure& figure) {
  return scene.mode == SceneMode::Circle ? render_circle(scene, figure)
                                         : render_sphere(scene, figure);
}

}  // namespace porism
