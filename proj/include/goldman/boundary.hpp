#pragma once

#include <optional>

#include "goldman/matrix.hpp"

namespace goldman {

/// Real quadratic irrational (p + q*sqrt(D))/r on the boundary of the upper
/// half-plane. Normalized: r > 0, gcd(p,q,r) = 1, and if D is a perfect
/// square (or q = 0) the radical is folded into p, leaving q = 0, D = 0.
/// All comparisons are exact.
class BoundaryPoint {
 public:
  BoundaryPoint() : p_(0), q_(0), r_(1), d_(0) {}
  BoundaryPoint(Int p, Int q, Int r, Int D);

  static BoundaryPoint rational(Int num, Int den) { return BoundaryPoint(std::move(num), 0, std::move(den), 0); }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& r() const { return r_; }
  const Int& D() const { return d_; }

  bool is_rational() const { return q_ == 0; }
  double to_double() const;

 private:
  Int p_, q_, r_, d_;
};

/// Sign of a + b*sqrt(D), exactly.
int quad_sign(const Int& a, const Int& b, const Int& D);

/// Exact three-way comparison: sign of (alpha - beta).
int boundary_cmp(const BoundaryPoint& alpha, const BoundaryPoint& beta);

inline bool boundary_less(const BoundaryPoint& a, const BoundaryPoint& b) { return boundary_cmp(a, b) < 0; }
inline bool boundary_eq(const BoundaryPoint& a, const BoundaryPoint& b) { return boundary_cmp(a, b) == 0; }

/// Image of a boundary point under a Mobius map, exact.
/// The denominator never vanishes for irrational points.
BoundaryPoint mobius_boundary(const ProjectiveMatrix& g, const BoundaryPoint& z);

/// True iff b lies strictly inside the counterclockwise open arc a -> c of the
/// boundary circle (finite points; the arc may wrap through infinity).
bool cyclic_ccw(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c);

/// Oriented axis of a hyperbolic element: repelling -> attracting.
struct Axis {
  BoundaryPoint repelling;
  BoundaryPoint attracting;
  ProjectiveMatrix owner;

  Axis reversed() const { return {attracting, repelling, inverse(owner)}; }
};

/// Endpoints of the invariant geodesic of m. Throws NotHyperbolic.
Axis fixed_points(const ProjectiveMatrix& m);

/// 0 if the endpoint pairs do not link (including coincident axes); otherwise
/// +1 when the counterclockwise cyclic order from A.repelling is
/// (A.rep, B.rep, A.att, B.att), and -1 for (A.rep, B.att, A.att, B.rep).
int crossing_sign(const Axis& a, const Axis& b);

/// Exactly zero iff z is a fixed point of m (root of c z^2 + (d-a) z - b).
bool fixes_boundary_point(const ProjectiveMatrix& m, const BoundaryPoint& z);

bool same_geodesic(const Axis& a, const Axis& b);

}  // namespace goldman
