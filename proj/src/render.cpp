#include "goldman/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "goldman/cosets.hpp"
#include "goldman/plane.hpp"

namespace goldman {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  if (std::abs(v) < 5e-4) v = 0.0;
  os << v;
  return os.str();
}

std::vector<PlanePoint> sample_geodesic(const PlanePoint& a, const PlanePoint& b, int n) {
  std::vector<PlanePoint> pts;
  pts.reserve(n + 1);
  if (std::abs(a.u - b.u) < 1e-9 * (1.0 + std::abs(a.u))) {
    for (int k = 0; k <= n; ++k) {
      double f = static_cast<double>(k) / n;
      pts.push_back({a.u, a.v * std::pow(b.v / a.v, f)});
    }
    return pts;
  }
  double m = (a.u * a.u + a.v * a.v - b.u * b.u - b.v * b.v) / (2.0 * (a.u - b.u));
  double r = std::hypot(a.u - m, a.v);
  double ta = std::atan2(a.v, a.u - m), tb = std::atan2(b.v, b.u - m);
  for (int k = 0; k <= n; ++k) {
    double t = ta + (tb - ta) * static_cast<double>(k) / n;
    pts.push_back({m + r * std::cos(t), r * std::sin(t)});
  }
  return pts;
}

}  // namespace

std::string svg_plot(const ProjectiveMatrix& x, const ProjectiveMatrix& y, const PlotOptions& opt) {
  Axis ax = fixed_points(x);
  GeodesicNumeric gx = geodesic_numeric(ax);
  double tau_x = translation_length(x);
  double s0 = gx.closest_coord({0.0, 1.0});

  auto cosets = crossing_double_cosets(x, y, opt.spec);
  struct Arc {
    double lo, hi;
    int sign;
  };
  std::vector<Arc> translates;
  for (const auto& dc : cosets) {
    Axis t = fixed_points(conjugate(dc.rep, y));
    double a = t.repelling.to_double(), b = t.attracting.to_double();
    translates.push_back({std::min(a, b), std::max(a, b), dc.sign});
  }

  double axl = std::min(ax.repelling.to_double(), ax.attracting.to_double());
  double axr = std::max(ax.repelling.to_double(), ax.attracting.to_double());
  double xmin = opt.xmin, xmax = opt.xmax, ymax = opt.ymax;
  if (!opt.has_window) {
    xmin = axl;
    xmax = axr;
    for (const auto& t : translates) {
      xmin = std::min(xmin, t.lo);
      xmax = std::max(xmax, t.hi);
    }
    double pad = 0.06 * (xmax - xmin) + 0.2;
    xmin -= pad;
    xmax += pad;
    ymax = 0.55 * (xmax - xmin);
  }

  const double width = 960.0;
  double scale = width / (xmax - xmin);
  double height = std::max(120.0, std::ceil(ymax * scale) + 20.0);
  auto px = [&](double u) { return (u - xmin) * scale; };
  auto py = [&](double v) { return height - 10.0 - v * scale; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
      << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"0\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(width) << "\" y2=\""
      << fmt(py(0)) << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";

  auto semicircle = [&](double lo, double hi, const char* color, double w) {
    double r = 0.5 * (hi - lo) * scale;
    svg << "<path d=\"M " << fmt(px(lo)) << " " << fmt(py(0)) << " A " << fmt(r) << " " << fmt(r)
        << " 0 0 1 " << fmt(px(hi)) << " " << fmt(py(0)) << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"" << fmt(w) << "\"/>\n";
  };
  auto polyline = [&](const std::vector<PlanePoint>& pts, const char* color, double w) {
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << fmt(w)
        << "\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k) svg << ' ';
      svg << fmt(px(pts[k].u)) << ',' << fmt(py(pts[k].v));
    }
    svg << "\"/>\n";
  };

  for (const auto& t : translates)
    semicircle(t.lo, t.hi, t.sign > 0 ? "#3a6ea5" : "#b5443c", 1.4);
  semicircle(axl, axr, "#666666", 2.6);

  // Fundamental segment of A_x, one translation length from the marked point.
  {
    std::vector<PlanePoint> seg;
    int n = 48;
    for (int k = 0; k <= n; ++k)
      seg.push_back(gx.at(s0 + tau_x * static_cast<double>(k) / n));
    polyline(seg, "#111111", 4.2);
  }

  if (opt.qg_p > 0 && opt.qg_q > 0) {
    auto verts = quasigeodesic(x, y, opt.qg_p, opt.qg_q, opt.qg_window);
    std::vector<PlanePoint> path;
    for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
      auto piece = sample_geodesic(verts[k], verts[k + 1], 16);
      if (k) piece.erase(piece.begin());
      path.insert(path.end(), piece.begin(), piece.end());
    }
    polyline(path, "#2e8b57", 1.8);
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace goldman
