#include "goldman/plane.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "goldman/errors.hpp"

namespace goldman {

double hyperbolic_distance(const PlanePoint& p, const PlanePoint& q) {
  double du = p.u - q.u, dv = p.v - q.v;
  double ch = 1.0 + (du * du + dv * dv) / (2.0 * p.v * q.v);
  return std::acosh(std::max(1.0, ch));
}

double displacement_radius(const ProjectiveMatrix& m) {
  double ch = to_double(m.frobenius_sq()) / 2.0;
  return std::acosh(std::max(1.0, ch));
}

PlanePoint mobius_plane(const ProjectiveMatrix& m, const PlanePoint& z) {
  std::complex<double> w(z.u, z.v);
  std::complex<double> num = to_double(m.a()) * w + to_double(m.b());
  std::complex<double> den = to_double(m.c()) * w + to_double(m.d());
  std::complex<double> r = num / den;
  return {r.real(), std::max(r.imag(), 1e-300)};
}

PlanePoint GeodesicNumeric::at(double t) const {
  double theta = 2.0 * std::atan(std::exp(-dir * t));
  return {center + radius * std::cos(theta), radius * std::sin(theta)};
}

double GeodesicNumeric::coord_of(const PlanePoint& z) const {
  double theta = std::atan2(z.v, z.u - center);
  return -dir * std::log(std::tan(theta / 2.0));
}

double GeodesicNumeric::closest_coord(const PlanePoint& z) const {
  double lo = -60.0, hi = 60.0;
  for (int it = 0; it < 240; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (hyperbolic_distance(at(m1), z) < hyperbolic_distance(at(m2), z))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

double GeodesicNumeric::distance_to(const PlanePoint& z) const {
  double du = z.u - center;
  double s = std::abs(du * du + z.v * z.v - radius * radius) / (2.0 * radius * z.v);
  return std::asinh(s);
}

GeodesicNumeric geodesic_numeric(const Axis& axis) {
  double rep = axis.repelling.to_double();
  double att = axis.attracting.to_double();
  GeodesicNumeric g;
  g.center = 0.5 * (rep + att);
  g.radius = 0.5 * std::abs(att - rep);
  g.dir = att > rep ? 1 : -1;
  return g;
}

PlanePoint geodesic_midpoint(const PlanePoint& a, const PlanePoint& b) {
  if (std::abs(a.u - b.u) < 1e-12 * (1.0 + std::abs(a.u))) {
    return {0.5 * (a.u + b.u), std::sqrt(a.v * b.v)};
  }
  double m = (a.u * a.u + a.v * a.v - b.u * b.u - b.v * b.v) / (2.0 * (a.u - b.u));
  double r = std::hypot(a.u - m, a.v);
  auto phi = [&](const PlanePoint& z) {
    double theta = std::atan2(z.v, z.u - m);
    return std::log(std::tan(theta / 2.0));
  };
  double mid = 0.5 * (phi(a) + phi(b));
  double theta = 2.0 * std::atan(std::exp(mid));
  return {m + r * std::cos(theta), r * std::sin(theta)};
}

PlanePoint axes_intersection(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
  Axis ax = fixed_points(x), ay = fixed_points(y);
  if (crossing_sign(ax, ay) == 0) fail(ErrorCode::AxesDoNotCross, "axes do not cross");
  GeodesicNumeric gx = geodesic_numeric(ax), gy = geodesic_numeric(ay);
  double du = gy.center - gx.center;
  double u = (gx.radius * gx.radius - gy.radius * gy.radius + gy.center * gy.center -
              gx.center * gx.center) /
             (2.0 * du);
  double h2 = gx.radius * gx.radius - (u - gx.center) * (u - gx.center);
  return {u, std::sqrt(std::max(h2, 1e-300))};
}

std::pair<PlanePoint, PlanePoint> product_axis_witnesses(const ProjectiveMatrix& x,
                                                         const ProjectiveMatrix& y) {
  PlanePoint p = axes_intersection(x, y);
  GeodesicNumeric gx = geodesic_numeric(fixed_points(x));
  GeodesicNumeric gy = geodesic_numeric(fixed_points(y));
  double q_t = gx.coord_of(p) + translation_length(x) / 2.0;
  double r_t = gy.coord_of(p) - translation_length(y) / 2.0;
  return {gy.at(r_t), gx.at(q_t)};
}

std::vector<PlanePoint> quasigeodesic(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                                      long p, long q, long window) {
  if (p < 1 || q < 1 || window < 0) throw std::invalid_argument("quasigeodesic: p,q >= 1, window >= 0");
  PlanePoint base1 = axes_intersection(x, y);
  ProjectiveMatrix xp = power(x, p), yq = power(y, q);
  ProjectiveMatrix g = compose(xp, yq);
  PlanePoint base0 = mobius_plane(inverse(yq), base1);
  std::vector<PlanePoint> out;
  out.reserve(2 * (2 * window + 1));
  for (long k = -window; k <= window; ++k) {
    ProjectiveMatrix gk = power(g, k);
    out.push_back(mobius_plane(gk, base0));
    out.push_back(mobius_plane(gk, base1));
  }
  return out;
}

}  // namespace goldman
