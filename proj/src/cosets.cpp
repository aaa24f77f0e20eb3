#include "goldman/cosets.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "goldman/conjugacy.hpp"
#include "goldman/errors.hpp"
#include "goldman/parallel.hpp"
#include "goldman/plane.hpp"

namespace goldman {

std::optional<long> exponent_of_power(const ProjectiveMatrix& h, const ProjectiveMatrix& x) {
  if (h.is_identity()) return 0;
  if (classify(h) != IsometryClass::Hyperbolic) return std::nullopt;
  Axis ax = fixed_points(x);
  Axis ah = fixed_points(h);
  int orient;
  if (boundary_eq(ah.attracting, ax.attracting) && boundary_eq(ah.repelling, ax.repelling))
    orient = 1;
  else if (boundary_eq(ah.attracting, ax.repelling) && boundary_eq(ah.repelling, ax.attracting))
    orient = -1;
  else
    return std::nullopt;
  Int target = abs(h.trace());
  Int t = abs(x.trace());
  Int prev = 2, cur = t;
  for (long n = 1; n <= 100000; ++n) {
    int c = cmp(cur, target);
    if (c == 0) {
      long m = orient * n;
      if (power(x, m) == h) return m;
      return std::nullopt;
    }
    if (c > 0) return std::nullopt;
    Int next = t * cur - prev;
    prev = cur;
    cur = next;
  }
  return std::nullopt;
}

namespace {

long modinv(long a, long n) {
  long t = 0, nt = 1, r = n, nr = a % n;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return t < 0 ? t + n : t;
}

bool in_open_arc_avoiding(const BoundaryPoint& v, const BoundaryPoint& from,
                          const BoundaryPoint& to, const BoundaryPoint& avoid) {
  return cyclic_ccw(from, v, to) != cyclic_ccw(from, avoid, to);
}

}  // namespace

std::optional<std::pair<long, long>> same_double_coset(const ProjectiveMatrix& g,
                                                       const ProjectiveMatrix& g2,
                                                       const ProjectiveMatrix& x,
                                                       const ProjectiveMatrix& y) {
  if (classify(x) != IsometryClass::Hyperbolic || classify(y) != IsometryClass::Hyperbolic)
    fail(ErrorCode::NotHyperbolic, "double cosets require hyperbolic x and y");
  Axis ax = fixed_points(x), ay = fixed_points(y);
  ProjectiveMatrix ginv = inverse(g), g2inv = inverse(g2);
  BoundaryPoint u_att = mobius_boundary(ginv, ax.attracting);
  BoundaryPoint v_att = mobius_boundary(g2inv, ax.attracting);

  auto finish = [&](long m, long k) -> std::optional<std::pair<long, long>> {
    if (compose(power(x, m), compose(g, power(y, k))) != g2)
      throw std::logic_error("double coset witness verification failed");
    return std::make_pair(m, k);
  };

  bool u_on_axis = boundary_eq(u_att, ay.attracting) || boundary_eq(u_att, ay.repelling);
  if (u_on_axis) {
    // g^-1 maps the axis of x onto the axis of y; every g2 y^-k g^-1 fixing the
    // axis of x pointwise is a primitive-root power, so the test is a linear
    // congruence on exponents.
    BoundaryPoint u_rep = mobius_boundary(ginv, ax.repelling);
    BoundaryPoint v_rep = mobius_boundary(g2inv, ax.repelling);
    if (!(boundary_eq(v_att, u_att) && boundary_eq(v_rep, u_rep))) return std::nullopt;
    auto [root, n] = primitive_root(x);
    auto s_opt = exponent_of_power(conjugate(g, y), root);
    auto j_opt = exponent_of_power(compose(g2, ginv), root);
    if (!s_opt || !j_opt) return std::nullopt;
    long s = *s_opt, j = *j_opt;
    long smod = ((s % n) + n) % n;
    long jmod = ((j % n) + n) % n;
    long k0;
    if (n == 1) {
      k0 = 0;
    } else if (smod == 0) {
      if (jmod != 0) return std::nullopt;
      k0 = 0;
    } else {
      long d = std::gcd(smod, n);
      if (jmod % d != 0) return std::nullopt;
      long s2 = smod / d, n2 = n / d, j2 = jmod / d;
      k0 = n2 == 1 ? 0 : (j2 % n2) * modinv(s2 % n2, n2) % n2;
    }
    return finish((j - s * k0) / n, k0);
  }

  // Generic case: x^m g y^k = g2 forces y^-k (g^-1 x+) = g2^-1 x+, and the
  // orbit of a non-fixed boundary point under y^-1 moves strictly
  // monotonically toward the repelling endpoint, so at most one k works.
  if (boundary_eq(v_att, ay.attracting) || boundary_eq(v_att, ay.repelling)) return std::nullopt;
  auto attempt = [&](long k) -> std::optional<std::pair<long, long>> {
    ProjectiveMatrix h = compose(g2, compose(power(y, -k), ginv));
    auto m = exponent_of_power(h, x);
    if (!m) return std::nullopt;
    return finish(*m, k);
  };

  ProjectiveMatrix yinv = inverse(y);
  BoundaryPoint a = u_att;
  for (long k = 0; k <= 100000; ++k) {
    if (boundary_eq(a, v_att)) return attempt(k);
    if (!in_open_arc_avoiding(v_att, a, ay.repelling, ay.attracting)) break;
    a = mobius_boundary(yinv, a);
  }
  a = mobius_boundary(y, u_att);
  for (long k = -1; k >= -100000; --k) {
    if (boundary_eq(a, v_att)) return attempt(k);
    if (!in_open_arc_avoiding(v_att, a, ay.attracting, ay.repelling)) break;
    a = mobius_boundary(y, a);
  }
  return std::nullopt;
}

namespace {

// Integer vectors z with ||Phi z||^2 <= c (rows of Phi act on z).
void ellipsoid_points(const std::array<std::array<double, 4>, 4>& phi, double c,
                      std::vector<std::array<long long, 4>>& out) {
  std::array<std::array<double, 4>, 4> gram{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0;
      for (int k = 0; k < 4; ++k) s += phi[k][i] * phi[k][j];
      gram[i][j] = s;
    }
  std::array<std::array<double, 4>, 4> r{};
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      double s = gram[i][j];
      for (int k = 0; k < i; ++k) s -= r[k][i] * r[k][j];
      if (i == j) {
        if (s <= 0) throw std::logic_error("covering form is not positive definite");
        r[i][i] = std::sqrt(s);
      } else {
        r[i][j] = s / r[i][i];
      }
    }
  }
  const double margin = 1e-7;
  std::array<long long, 4> z{};
  auto recurse = [&](auto&& self, int level, double remaining) -> void {
    double off = 0;
    for (int j = level + 1; j < 4; ++j) off += r[level][j] * static_cast<double>(z[j]);
    double half = std::sqrt(std::max(remaining, 0.0)) + margin;
    double lo_d = std::ceil((-half - off) / r[level][level] - margin);
    double hi_d = std::floor((half - off) / r[level][level] + margin);
    if (std::abs(lo_d) > 4e18 || std::abs(hi_d) > 4e18)
      throw std::invalid_argument("element too large for exact crossing enumeration");
    long long lo = static_cast<long long>(lo_d);
    long long hi = static_cast<long long>(hi_d);
    for (long long v = lo; v <= hi; ++v) {
      z[level] = v;
      double yv = r[level][level] * static_cast<double>(v) + off;
      double rem2 = remaining - yv * yv;
      if (rem2 < -margin) continue;
      if (level == 0) {
        out.push_back(z);
        if (out.size() > 500000) throw std::logic_error("covering enumeration overflow");
      } else {
        self(self, level - 1, rem2);
      }
    }
  };
  recurse(recurse, 3, c + margin);
}

struct CellBasis {
  // A = M_W^-1 and B = M_Q for basepoint matrices M_P i -> P.
  std::array<std::array<double, 2>, 2> a, b;
};

CellBasis cell_basis(const PlanePoint& w, const PlanePoint& q) {
  CellBasis cb;
  double sw = std::sqrt(w.v), sq = std::sqrt(q.v);
  cb.a = {{{1.0 / sw, -w.u / sw}, {0.0, sw}}};
  cb.b = {{{sq, q.u / sq}, {0.0, 1.0 / sq}}};
  return cb;
}

std::array<std::array<double, 4>, 4> cell_form(const CellBasis& cb) {
  const auto& A = cb.a;
  const auto& B = cb.b;
  // vec(A h B) over h = (h0,h1,h2,h3) row-major.
  return {{{A[0][0] * B[0][0], A[0][0] * B[1][0], A[0][1] * B[0][0], A[0][1] * B[1][0]},
           {A[0][0] * B[0][1], A[0][0] * B[1][1], A[0][1] * B[0][1], A[0][1] * B[1][1]},
           {A[1][0] * B[0][0], A[1][0] * B[1][0], A[1][1] * B[0][0], A[1][1] * B[1][0]},
           {A[1][0] * B[0][1], A[1][0] * B[1][1], A[1][1] * B[0][1], A[1][1] * B[1][1]}}};
}

bool norm_lex_less(const ProjectiveMatrix& a, const ProjectiveMatrix& b) {
  int c = cmp(a.frobenius_sq(), b.frobenius_sq());
  if (c != 0) return c < 0;
  return a < b;
}

ProjectiveMatrix minimize_in_coset(ProjectiveMatrix g, const ProjectiveMatrix& x,
                                   const ProjectiveMatrix& y) {
  const ProjectiveMatrix xinv = inverse(x), yinv = inverse(y);
  for (int guard = 0; guard < 100000; ++guard) {
    bool changed = false;
    auto descend = [&](auto step) {
      for (;;) {
        ProjectiveMatrix cand = step(g);
        if (!norm_lex_less(cand, g)) return;
        g = std::move(cand);
        changed = true;
      }
    };
    descend([&](const ProjectiveMatrix& v) { return compose(x, v); });
    descend([&](const ProjectiveMatrix& v) { return compose(xinv, v); });
    descend([&](const ProjectiveMatrix& v) { return compose(v, y); });
    descend([&](const ProjectiveMatrix& v) { return compose(v, yinv); });
    if (!changed) return g;
  }
  return g;
}

}  // namespace

std::vector<DoubleCosetRep> crossing_double_cosets(const ProjectiveMatrix& x,
                                                   const ProjectiveMatrix& y,
                                                   const SubgroupSpec& spec, int segment_shift) {
  if (classify(x) != IsometryClass::Hyperbolic || classify(y) != IsometryClass::Hyperbolic)
    fail(ErrorCode::NotHyperbolic, "crossing double cosets require hyperbolic x and y");
  if (!is_member(spec, x) || !is_member(spec, y))
    fail(ErrorCode::NotMember, "inputs must belong to the subgroup");

  Axis ax = fixed_points(x), ay = fixed_points(y);
  GeodesicNumeric gx = geodesic_numeric(ax), gy = geodesic_numeric(ay);
  double tau_x = translation_length(x), tau_y = translation_length(y);
  PlanePoint base{0.0, 1.0};
  double s0 = gx.closest_coord(base) + segment_shift * tau_x;
  double u0 = gy.closest_coord(base);

  // Marked points at unit spacing along the fundamental segment of A_x and
  // one full period of A_y. Any element whose translated axis crosses the
  // segment has a coset sibling moving some Q_l within 1 of some W_j.
  long jx = static_cast<long>(std::ceil(tau_x)) + 1;
  long jy = static_cast<long>(std::ceil(tau_y)) + 1;
  double cover_bound = 2.0 * std::cosh(1.25);

  std::vector<std::vector<std::array<long long, 4>>> cell_hits(
      static_cast<std::size_t>(jx * jy));
  parallel_for(cell_hits.size(), [&](std::size_t idx) {
    long j = static_cast<long>(idx) / jy;
    long l = static_cast<long>(idx) % jy;
    PlanePoint w = gx.at(s0 + static_cast<double>(j));
    PlanePoint q = gy.at(u0 + static_cast<double>(l));
    std::vector<std::array<long long, 4>> pts;
    ellipsoid_points(cell_form(cell_basis(w, q)), cover_bound, pts);
    auto& keep = cell_hits[idx];
    for (auto& z : pts) {
      __int128 det = static_cast<__int128>(z[0]) * z[3] - static_cast<__int128>(z[1]) * z[2];
      if (det != 1) continue;
      // Canonical sign: first nonzero entry positive.
      for (int e = 0; e < 4; ++e) {
        if (z[e] > 0) break;
        if (z[e] < 0) {
          for (int f = 0; f < 4; ++f) z[f] = -z[f];
          break;
        }
      }
      keep.push_back(z);
    }
  });

  std::vector<std::array<long long, 4>> candidates;
  for (auto& cell : cell_hits)
    candidates.insert(candidates.end(), cell.begin(), cell.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  struct Survivor {
    ProjectiveMatrix h;
    int sign = 0;
  };
  std::vector<Survivor> survivors(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    const auto& z = candidates[i];
    ProjectiveMatrix h{Int(static_cast<long>(z[0])), Int(static_cast<long>(z[1])),
                       Int(static_cast<long>(z[2])), Int(static_cast<long>(z[3]))};
    if (!is_member(spec, h)) return;
    int s = crossing_sign(ax, fixed_points(conjugate(h, y)));
    if (s == 0) return;
    survivors[i] = Survivor{std::move(h), s};
  });
  survivors.erase(std::remove_if(survivors.begin(), survivors.end(),
                                 [](const Survivor& s) { return s.sign == 0; }),
                  survivors.end());
  std::sort(survivors.begin(), survivors.end(),
            [](const Survivor& a, const Survivor& b) { return norm_lex_less(a.h, b.h); });

  struct Group {
    ProjectiveMatrix best;
    int sign;
  };
  std::vector<Group> groups;
  for (const auto& s : survivors) {
    bool placed = false;
    for (auto& grp : groups) {
      if (same_double_coset(grp.best, s.h, x, y)) {
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back(Group{s.h, s.sign});
  }

  std::vector<DoubleCosetRep> out;
  out.reserve(groups.size());
  for (auto& grp : groups) {
    ProjectiveMatrix rep = minimize_in_coset(grp.best, x, y);
    ProjectiveMatrix term = compose(x, conjugate(rep, y));
    if (classify(term) != IsometryClass::Hyperbolic)
      throw std::logic_error("crossing double coset produced a non-hyperbolic product");
    out.push_back(DoubleCosetRep{std::move(rep), grp.sign, std::move(term)});
  }
  std::sort(out.begin(), out.end(),
            [](const DoubleCosetRep& a, const DoubleCosetRep& b) { return a.rep < b.rep; });
  return out;
}

long geometric_intersection_oracle(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                                   const SubgroupSpec& spec) {
  if (!is_member(spec, x) || !is_member(spec, y))
    fail(ErrorCode::NotMember, "inputs must belong to the subgroup");
  if (classify(x) != IsometryClass::Hyperbolic || classify(y) != IsometryClass::Hyperbolic)
    return 0;
  if (are_conjugate(x, y, spec))
    fail(ErrorCode::ConjugateInputs, "intersection oracle requires non-conjugate classes");
  return static_cast<long>(crossing_double_cosets(x, y, spec).size());
}

long geometric_self_intersection_oracle(const ProjectiveMatrix& x, const SubgroupSpec& spec) {
  if (!is_member(spec, x)) fail(ErrorCode::NotMember, "input must belong to the subgroup");
  if (classify(x) != IsometryClass::Hyperbolic)
    fail(ErrorCode::NotHyperbolic, "self-intersection oracle requires a hyperbolic element");
  if (primitive_root(x).second != 1)
    fail(ErrorCode::NotPrimitive, "self-intersection oracle requires a primitive element");
  long count = static_cast<long>(crossing_double_cosets(x, x, spec).size());
  if (count % 2 != 0) fail(ErrorCode::OddCosetCount, "unpaired self-crossing double coset");
  return count / 2;
}

}  // namespace goldman
