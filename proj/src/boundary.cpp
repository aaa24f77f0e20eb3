#include "goldman/boundary.hpp"

#include <cmath>
#include <stdexcept>

#include "goldman/errors.hpp"

namespace goldman {

BoundaryPoint::BoundaryPoint(Int p, Int q, Int r, Int D)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(D)) {
  if (r_ == 0) throw std::invalid_argument("boundary point denominator is zero");
  if (d_ < 0) throw std::invalid_argument("boundary point radicand is negative");
  if (q_ != 0 && mpz_perfect_square_p(d_.get_mpz_t())) {
    Int s;
    mpz_sqrt(s.get_mpz_t(), d_.get_mpz_t());
    p_ += q_ * s;
    q_ = 0;
  }
  if (q_ == 0) d_ = 0;
  if (d_ == 0) q_ = 0;
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

double BoundaryPoint::to_double() const {
  return (p_.get_d() + q_.get_d() * std::sqrt(d_.get_d())) / r_.get_d();
}

int quad_sign(const Int& a, const Int& b, const Int& D) {
  if (b == 0 || D == 0) return sgn(a);
  int sa = sgn(a), sb = sgn(b);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b| sqrt(D).
  Int lhs = a * a;
  Int rhs = b * b * D;
  return sa * cmp(lhs, rhs);
}

namespace {

// Sign of A + B*sqrt(D1) + C*sqrt(D2), exactly, via at most two squarings.
int sign_two_radicals(const Int& A, const Int& B, const Int& D1, const Int& C, const Int& D2) {
  int su = quad_sign(A, B, D1);
  if (C == 0 || D2 == 0) return su;
  int sv = sgn(C);
  if (su == 0) return sv;
  if (su == sv) return su;
  // u and v have opposite signs; compare u^2 against v^2.
  Int a2 = A * A + B * B * D1 - C * C * D2;
  Int b2 = 2 * A * B;
  return su * quad_sign(a2, b2, D1);
}

}  // namespace

int boundary_cmp(const BoundaryPoint& x, const BoundaryPoint& y) {
  // alpha - beta = [ (p1 r2 - p2 r1) + q1 r2 sqrt(D1) - q2 r1 sqrt(D2) ] / (r1 r2)
  Int A = x.p() * y.r() - y.p() * x.r();
  Int B = x.q() * y.r();
  Int C = -(y.q() * x.r());
  return sign_two_radicals(A, B, x.D(), C, y.D());
}

BoundaryPoint mobius_boundary(const ProjectiveMatrix& g, const BoundaryPoint& z) {
  // g z = (a z + b)/(c z + d); rationalize by the conjugate of the denominator.
  const Int& p = z.p();
  const Int& q = z.q();
  const Int& r = z.r();
  const Int& D = z.D();
  Int np = g.a() * p + g.b() * r;  // numerator = np + nq sqrt(D)
  Int nq = g.a() * q;
  Int dp = g.c() * p + g.d() * r;  // denominator = dp + dq sqrt(D)
  Int dq = g.c() * q;
  Int den = dp * dp - dq * dq * D;
  if (den == 0) throw std::invalid_argument("mobius image of a pole");
  Int rp = np * dp - nq * dq * D;
  Int rq = nq * dp - np * dq;
  return BoundaryPoint(rp, rq, den, D);
}

bool cyclic_ccw(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c) {
  bool ab = boundary_less(a, b), bc = boundary_less(b, c), ca = boundary_less(c, a);
  return (ab && bc) || (bc && ca) || (ca && ab);
}

Axis fixed_points(const ProjectiveMatrix& m) {
  if (classify(m) != IsometryClass::Hyperbolic)
    fail(ErrorCode::NotHyperbolic, "axis requires a hyperbolic element");
  // Work with the lift of positive trace; endpoints ((a-d) +- sqrt(tr^2-4))/(2c).
  Int a = m.a(), b = m.b(), c = m.c(), d = m.d();
  if (sgn(a + d) < 0) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  Int tr = a + d;
  Int D = tr * tr - 4;
  // Hyperbolic elements of PSL(2,Z) have c != 0, hence finite irrational endpoints.
  if (c == 0) throw std::logic_error("hyperbolic element with c = 0");
  BoundaryPoint attracting(a - d, 1, 2 * c, D);
  BoundaryPoint repelling(a - d, -1, 2 * c, D);
  return Axis{repelling, attracting, m};
}

int crossing_sign(const Axis& A, const Axis& B) {
  const BoundaryPoint& ar = A.repelling;
  const BoundaryPoint& aa = A.attracting;
  const BoundaryPoint& br = B.repelling;
  const BoundaryPoint& ba = B.attracting;
  // Shared endpoints mean coincident fixed-point sets in a discrete group.
  if (boundary_eq(ar, br) || boundary_eq(ar, ba) || boundary_eq(aa, br) || boundary_eq(aa, ba))
    return 0;
  bool lo_is_rep = boundary_less(ar, aa);
  const BoundaryPoint& lo = lo_is_rep ? ar : aa;
  const BoundaryPoint& hi = lo_is_rep ? aa : ar;
  bool br_in = boundary_less(lo, br) && boundary_less(br, hi);
  bool ba_in = boundary_less(lo, ba) && boundary_less(ba, hi);
  if (br_in == ba_in) return 0;
  // Linked. +1 iff B.repelling lies on the ccw arc A.repelling -> A.attracting.
  bool br_on_ccw_arc = lo_is_rep ? br_in : !br_in;
  return br_on_ccw_arc ? 1 : -1;
}

bool fixes_boundary_point(const ProjectiveMatrix& m, const BoundaryPoint& z) {
  // c z^2 + (d-a) z - b = 0, expanded over (p + q sqrt(D))/r.
  const Int& p = z.p();
  const Int& q = z.q();
  const Int& r = z.r();
  const Int& D = z.D();
  Int rational = m.c() * (p * p + q * q * D) + (m.d() - m.a()) * p * r - m.b() * r * r;
  Int radical = 2 * m.c() * p * q + (m.d() - m.a()) * q * r;
  return rational == 0 && radical == 0;
}

bool same_geodesic(const Axis& a, const Axis& b) {
  return (boundary_eq(a.repelling, b.repelling) && boundary_eq(a.attracting, b.attracting)) ||
         (boundary_eq(a.repelling, b.attracting) && boundary_eq(a.attracting, b.repelling));
}

}  // namespace goldman
