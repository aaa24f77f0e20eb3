#pragma once

#include <utility>
#include <vector>

#include "goldman/boundary.hpp"

namespace goldman {

/// Point of the upper half-plane, v > 0. Floating point; used for witnesses,
/// radii and plotting, never for correctness decisions.
struct PlanePoint {
  double u = 0.0;
  double v = 1.0;
};

double hyperbolic_distance(const PlanePoint& p, const PlanePoint& q);

/// d(i, M*i) = arccosh(||M||_F^2 / 2).
double displacement_radius(const ProjectiveMatrix& m);

PlanePoint mobius_plane(const ProjectiveMatrix& m, const PlanePoint& z);

/// Numeric model of an oriented geodesic semicircle. Arc-length coordinate t
/// increases toward the attracting endpoint, with t = 0 at the apex.
struct GeodesicNumeric {
  double center = 0.0;
  double radius = 1.0;
  int dir = 1;  // +1 when the attracting endpoint is the right one

  PlanePoint at(double t) const;
  double coord_of(const PlanePoint& z) const;     // arc coordinate of the projection
  double closest_coord(const PlanePoint& z) const;
  double distance_to(const PlanePoint& z) const;  // distance from z to the geodesic
};

GeodesicNumeric geodesic_numeric(const Axis& axis);

/// Geodesic through two plane points (semicircle or vertical-line midpoint).
PlanePoint geodesic_midpoint(const PlanePoint& a, const PlanePoint& b);

/// Witness points of the product-axis construction: for crossing axes of x
/// and y meeting at P, Q is tau_x/2 forward of P on A_x and R is tau_y/2
/// backward of P on A_y; then R, Q lie on the axis of x*y and
/// translation_length(x*y) = 2 d(R,Q). Throws AxesDoNotCross.
std::pair<PlanePoint, PlanePoint> product_axis_witnesses(const ProjectiveMatrix& x,
                                                         const ProjectiveMatrix& y);

/// Numeric intersection point of the axes of x and y. Throws AxesDoNotCross.
PlanePoint axes_intersection(const ProjectiveMatrix& x, const ProjectiveMatrix& y);

/// Vertices of the periodic piecewise-geodesic path alternating a segment of
/// length q*tau_y along a translate of A_y with a segment of length p*tau_x
/// along a translate of A_x; `window` fundamental periods on each side of 0.
std::vector<PlanePoint> quasigeodesic(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                                      long p, long q, long window);

}  // namespace goldman
