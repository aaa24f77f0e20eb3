#include "goldman/conjugacy.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "goldman/ball.hpp"
#include "goldman/errors.hpp"
#include "goldman/plane.hpp"

namespace goldman {

std::string least_rotation(const std::string& s) {
  // Booth's algorithm.
  std::string t = s + s;
  const long n = static_cast<long>(t.size());
  std::vector<long> f(n, -1);
  long k = 0;
  for (long j = 1; j < n; ++j) {
    char sj = t[j];
    long i = f[j - k - 1];
    while (i != -1 && sj != t[k + i + 1]) {
      if (sj < t[k + i + 1]) k = j - i - 1;
      i = f[i];
    }
    if (sj != t[k + i + 1]) {
      if (sj < t[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return t.substr(k, s.size());
}

namespace {

long floor_boundary(const BoundaryPoint& z) {
  // Exact integer seed: floor((p + q*floor(sqrt(D)))/r) is within one of the
  // true floor; the loops then settle it with exact comparisons.
  Int s;
  mpz_sqrt(s.get_mpz_t(), z.D().get_mpz_t());
  Int guess;
  Int num = z.p() + z.q() * s;
  mpz_fdiv_q(guess.get_mpz_t(), num.get_mpz_t(), z.r().get_mpz_t());
  if (!guess.fits_slong_p()) throw std::invalid_argument("fixed point too large for normal form");
  long k = guess.get_si();
  while (boundary_cmp(z, BoundaryPoint::rational(k, 1)) < 0) --k;
  while (boundary_cmp(z, BoundaryPoint::rational(k + 1, 1)) >= 0) ++k;
  return k;
}

GroupWord word_from_rl(const std::string& letters) {
  std::vector<Gen> gens;
  gens.reserve(letters.size());
  for (char c : letters) gens.push_back(c == 'R' ? Gen::T : Gen::L);
  return GroupWord(std::move(gens));
}

// Conjugates m so that the attracting point is positive and the repelling
// point negative; such conjugates are exactly the nonnegative L/R words.
ProjectiveMatrix position_for_peel(const ProjectiveMatrix& m, ProjectiveMatrix& conj) {
  ProjectiveMatrix cur = m;
  conj = ProjectiveMatrix();
  Axis ax = fixed_points(cur);
  long k = floor_boundary(ax.attracting);
  if (k != 0) {
    ProjectiveMatrix shift = power(gen_matrix(Gen::T), -k);
    cur = conjugate(shift, cur);
    conj = compose(shift, conj);
    ax = fixed_points(cur);
  }
  if (boundary_cmp(ax.repelling, BoundaryPoint::rational(0, 1)) > 0) {
    // Walk the Stern-Brocot interval down onto the attracting point until the
    // repelling point falls outside; the interval matrix then separates them.
    Int lop = 0, loq = 1, hip = 1, hiq = 0;
    int guard = 0;
    while (true) {
      if (++guard > 200000) throw std::logic_error("interval walk did not terminate");
      bool outside = boundary_cmp(ax.repelling, BoundaryPoint::rational(lop, loq)) < 0 ||
                     (hiq != 0 && boundary_cmp(ax.repelling, BoundaryPoint::rational(hip, hiq)) > 0);
      if (outside) break;
      Int mp = lop + hip, mq = loq + hiq;
      if (boundary_cmp(ax.attracting, BoundaryPoint::rational(mp, mq)) < 0) {
        hip = mp;
        hiq = mq;
      } else {
        lop = mp;
        loq = mq;
      }
    }
    ProjectiveMatrix g(hip, lop, hiq, loq);
    ProjectiveMatrix ginv = inverse(g);
    cur = conjugate(ginv, cur);
    conj = compose(ginv, conj);
  }
  if (sgn(cur.a()) < 0 || sgn(cur.b()) < 0 || sgn(cur.c()) < 0 || sgn(cur.d()) < 0)
    throw std::logic_error("peel positioning did not reach a nonnegative matrix");
  return cur;
}

}  // namespace

RLNormalForm rl_normal_form(const ProjectiveMatrix& m) {
  if (classify(m) != IsometryClass::Hyperbolic)
    fail(ErrorCode::NotHyperbolic, "normal form requires a hyperbolic element");
  ProjectiveMatrix conj;
  ProjectiveMatrix cur = position_for_peel(m, conj);

  const ProjectiveMatrix R = gen_matrix(Gen::T);
  const ProjectiveMatrix L = gen_matrix(Gen::L);
  const ProjectiveMatrix Rinv = inverse(R);
  const ProjectiveMatrix Linv = inverse(L);

  std::map<std::string, std::size_t> seen;
  std::vector<ProjectiveMatrix> conj_at;
  std::vector<ProjectiveMatrix> state_at;
  std::string letters;
  std::size_t cycle_start = 0;
  for (;;) {
    if (letters.size() > 2000000) throw std::logic_error("peel did not cycle");
    std::string key = cur.str();
    auto it = seen.find(key);
    if (it != seen.end()) {
      cycle_start = it->second;
      break;
    }
    seen.emplace(std::move(key), state_at.size());
    state_at.push_back(cur);
    conj_at.push_back(conj);
    bool peel_r = cur.a() >= cur.c() && cur.b() >= cur.d();
    const ProjectiveMatrix& w = peel_r ? Rinv : Linv;
    letters += peel_r ? 'R' : 'L';
    cur = conjugate(w, cur);
    conj = compose(w, conj);
  }

  std::string block = letters.substr(cycle_start);
  const ProjectiveMatrix& ms = state_at[cycle_start];
  const ProjectiveMatrix& cs = conj_at[cycle_start];

  // ms equals the block word raised to its multiplicity.
  ProjectiveMatrix p_block = evaluate(word_from_rl(block));
  Int target = abs(ms.trace());
  ProjectiveMatrix acc = p_block;
  long mult = 0;
  for (long j = 1; j <= 1000000; ++j) {
    Int t = abs(acc.trace());
    if (t == target) {
      if (acc != ms) throw std::logic_error("peel cycle mismatch");
      mult = j;
      break;
    }
    if (t > target) throw std::logic_error("peel multiplicity not found");
    acc = compose(acc, p_block);
  }
  if (mult == 0) throw std::logic_error("peel multiplicity not found");

  std::string full;
  full.reserve(block.size() * mult);
  for (long j = 0; j < mult; ++j) full += block;
  std::string canon = least_rotation(full);

  // Rotating the word by r conjugates by its length-r prefix.
  std::size_t rot = 0;
  if (canon != full) {
    std::string doubled = full + full;
    rot = doubled.find(canon);
    if (rot == std::string::npos || rot >= full.size()) throw std::logic_error("rotation not found");
  }
  ProjectiveMatrix prefix = evaluate(word_from_rl(full.substr(0, rot)));
  ProjectiveMatrix conj_final = compose(inverse(prefix), cs);

  if (canon.find('L') == std::string::npos || canon.find('R') == std::string::npos)
    throw std::logic_error("hyperbolic word must use both letters");
  if (conjugate(conj_final, m) != evaluate(word_from_rl(canon)))
    throw std::logic_error("normal form verification failed");
  return RLNormalForm{CyclicWord{std::move(canon)}, std::move(conj_final)};
}

std::pair<ProjectiveMatrix, long> primitive_root(const ProjectiveMatrix& m) {
  RLNormalForm nf = rl_normal_form(m);
  const std::string& w = nf.word.letters;
  std::size_t n = w.size();
  std::size_t period = n;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) ok = w[i] == w[(i + d) % n];
    if (ok) {
      period = d;
      break;
    }
  }
  long mult = static_cast<long>(n / period);
  ProjectiveMatrix q = evaluate(word_from_rl(w.substr(0, period)));
  ProjectiveMatrix root = conjugate(inverse(nf.conjugator), q);
  if (power(root, mult) != m) throw std::logic_error("primitive root verification failed");
  return {std::move(root), mult};
}

namespace {

std::string elliptic_tag(const ProjectiveMatrix& m) {
  Int t = m.trace();
  if (t == 0) return "S";
  // Use the lift of trace +1; the rotation sense is read off the sign of c.
  int c_sign = (t == 1) ? sgn(m.c()) : -sgn(m.c());
  return c_sign > 0 ? "ST" : "STST";
}

// g m g^-1 = [[1, n],[0, 1]]; returns (n, g).
std::pair<Int, ProjectiveMatrix> parabolic_normalize(const ProjectiveMatrix& m) {
  if (m.c() == 0) return {m.b(), ProjectiveMatrix()};
  Int num = m.a() - m.d();
  Int den = 2 * m.c();
  Int g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Int p = num / g, q = den / g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  Int gg, u, v;
  mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  ProjectiveMatrix w(u, v, -q, p);
  ProjectiveMatrix n = conjugate(w, m);
  if (n.c() != 0 || n.a() != 1) throw std::logic_error("cusp normalization failed");
  return {n.b(), std::move(w)};
}

std::string parabolic_payload(const Int& n) {
  return (sgn(n) > 0 ? "R:" : "L:") + Int(abs(n)).get_str();
}

struct ResidueMatrix {
  long a, b, c, d;
};

ResidueMatrix reduce_mod(const ProjectiveMatrix& m, long n) {
  auto r = [&](const Int& v) {
    Int x = v % n;
    long out = x.get_si();
    return out < 0 ? out + n : out;
  };
  return {r(m.a()), r(m.b()), r(m.c()), r(m.d())};
}

ResidueMatrix mul_mod(const ResidueMatrix& x, const ResidueMatrix& y, long n) {
  return {(x.a * y.a + x.b * y.c) % n, (x.a * y.b + x.b * y.d) % n,
          (x.c * y.a + x.d * y.c) % n, (x.c * y.b + x.d * y.d) % n};
}

// Full-group conjugacy; returns a witness or nullopt. May throw NotHyperbolic
// only through rl_normal_form misuse, which the kind dispatch prevents.
std::optional<ProjectiveMatrix> conjugate_in_full(const ProjectiveMatrix& m,
                                                  const ProjectiveMatrix& n) {
  IsometryClass km = classify(m), kn = classify(n);
  if (km != kn) return std::nullopt;
  switch (km) {
    case IsometryClass::Identity:
      return ProjectiveMatrix();
    case IsometryClass::Parabolic: {
      auto [vm, gm] = parabolic_normalize(m);
      auto [vn, gn] = parabolic_normalize(n);
      if (vm != vn) return std::nullopt;
      ProjectiveMatrix w = compose(inverse(gn), gm);
      if (conjugate(w, m) != n) throw std::logic_error("parabolic witness failed");
      return w;
    }
    case IsometryClass::Elliptic: {
      if (elliptic_tag(m) != elliptic_tag(n)) return std::nullopt;
      for (double r = 2.0; r <= 26.0; r += 2.0) {
        Ball ball = enumerate_ball(r, SubgroupSpec::full());
        for (const auto& g : ball.elements)
          if (conjugate(g, m) == n) return g;
      }
      throw std::logic_error("elliptic witness search exhausted");
    }
    case IsometryClass::Hyperbolic: {
      RLNormalForm fm = rl_normal_form(m);
      RLNormalForm fn = rl_normal_form(n);
      if (fm.word != fn.word) return std::nullopt;
      ProjectiveMatrix w = compose(inverse(fn.conjugator), fm.conjugator);
      if (conjugate(w, m) != n) throw std::logic_error("hyperbolic witness failed");
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string ConjugacyClass::name() const {
  std::string base;
  switch (kind) {
    case IsometryClass::Identity: base = "1"; break;
    case IsometryClass::Hyperbolic: base = payload; break;
    case IsometryClass::Elliptic: base = payload; break;
    case IsometryClass::Parabolic: {
      auto sep = payload.find(':');
      base = payload.substr(0, sep) + "^" + payload.substr(sep + 1);
      break;
    }
  }
  if (!orbit.empty()) base += "|" + orbit;
  return base;
}

std::optional<ProjectiveMatrix> are_conjugate(const ProjectiveMatrix& m, const ProjectiveMatrix& n,
                                              const SubgroupSpec& spec) {
  if (!is_member(spec, m) || !is_member(spec, n))
    fail(ErrorCode::NotMember, "conjugacy inputs must belong to the subgroup");
  if (spec.is_full()) return conjugate_in_full(m, n);

  if (classify(m) != IsometryClass::Hyperbolic || classify(n) != IsometryClass::Hyperbolic)
    fail(ErrorCode::UnsupportedClassKind, "subgroup conjugacy is decided for hyperbolic elements only");
  auto full_witness = conjugate_in_full(m, n);
  if (!full_witness) return std::nullopt;
  ProjectiveMatrix c0 = *full_witness;
  auto [root, mult] = primitive_root(m);
  (void)mult;
  // Every full conjugator is c0 * root^k; scan one period of root mod N.
  long level = spec.level;
  ResidueMatrix rc = reduce_mod(c0, level);
  ResidueMatrix rr = reduce_mod(root, level);
  ResidueMatrix racc = rc;
  ResidueMatrix rpow{1 % level, 0, 0, 1 % level};
  for (long k = 0;; ++k) {
    if (k > 4000000) throw std::logic_error("residue period scan exhausted");
    if (is_member_residue(spec, racc.a, racc.b, racc.c, racc.d)) {
      ProjectiveMatrix g = compose(c0, power(root, k));
      if (!is_member(spec, g) || conjugate(g, m) != n)
        throw std::logic_error("subgroup witness verification failed");
      return g;
    }
    racc = mul_mod(racc, rr, level);
    rpow = mul_mod(rpow, rr, level);
    if (rpow.a == 1 % level && rpow.b == 0 && rpow.c == 0 && rpow.d == 1 % level) {
      // root^(k+1) is the identity mod N; all residues visited.
      return std::nullopt;
    }
  }
}

ConjugacyClass conjugacy_class(const ProjectiveMatrix& m, const SubgroupSpec& spec) {
  if (!is_member(spec, m)) fail(ErrorCode::NotMember, "element is not in the subgroup");
  IsometryClass k = classify(m);
  if (spec.is_full()) {
    switch (k) {
      case IsometryClass::Identity: return {k, "", ""};
      case IsometryClass::Hyperbolic: return {k, rl_normal_form(m).word.letters, ""};
      case IsometryClass::Elliptic: return {k, elliptic_tag(m), ""};
      case IsometryClass::Parabolic: return {k, parabolic_payload(parabolic_normalize(m).first), ""};
    }
  }
  if (k != IsometryClass::Hyperbolic)
    fail(ErrorCode::UnsupportedClassKind, "subgroup classes are defined for hyperbolic elements only");
  RLNormalForm nf = rl_normal_form(m);
  ProjectiveMatrix word_matrix = evaluate(word_from_rl(nf.word.letters));
  double needed = displacement_radius(inverse(nf.conjugator)) + 1.0;
  for (double r = 2.0; r <= needed + 2.0; r += 2.0) {
    Ball ball = enumerate_ball(r, SubgroupSpec::full());
    for (const auto& t : ball.elements) {
      ProjectiveMatrix cand = conjugate(t, word_matrix);
      if (!is_member(spec, cand)) continue;
      if (are_conjugate(cand, m, spec)) return {k, nf.word.letters, cand.str()};
    }
  }
  throw std::logic_error("orbit representative search exhausted");
}

std::optional<ProjectiveMatrix> brute_force_conjugacy_oracle(const ProjectiveMatrix& m,
                                                             const ProjectiveMatrix& n,
                                                             const SubgroupSpec& spec,
                                                             double radius) {
  if (!is_member(spec, m) || !is_member(spec, n))
    fail(ErrorCode::NotMember, "conjugacy inputs must belong to the subgroup");
  Ball ball = enumerate_ball(radius, spec);
  for (const auto& g : ball.elements)
    if (conjugate(g, m) == n) return g;
  return std::nullopt;
}

}  // namespace goldman
