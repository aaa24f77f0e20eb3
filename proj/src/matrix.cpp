#include "goldman/matrix.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "goldman/errors.hpp"

namespace goldman {

int sign_of(const Int& v) { return sgn(v); }

double to_double(const Int& v) { return v.get_d(); }

const char* isometry_class_name(IsometryClass k) {
  switch (k) {
    case IsometryClass::Identity: return "Identity";
    case IsometryClass::Elliptic: return "Elliptic";
    case IsometryClass::Parabolic: return "Parabolic";
    case IsometryClass::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

ProjectiveMatrix::ProjectiveMatrix(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) throw std::invalid_argument("matrix determinant must be 1");
  // Canonical sign: first nonzero of (a,b,c,d) positive.
  const Int* entries[4] = {&a_, &b_, &c_, &d_};
  for (const Int* e : entries) {
    int s = sgn(*e);
    if (s > 0) break;
    if (s < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
      break;
    }
  }
}

bool ProjectiveMatrix::is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

bool ProjectiveMatrix::operator==(const ProjectiveMatrix& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

bool ProjectiveMatrix::operator<(const ProjectiveMatrix& o) const {
  int c0 = cmp(a_, o.a_);
  if (c0 != 0) return c0 < 0;
  c0 = cmp(b_, o.b_);
  if (c0 != 0) return c0 < 0;
  c0 = cmp(c_, o.c_);
  if (c0 != 0) return c0 < 0;
  return cmp(d_, o.d_) < 0;
}

std::string ProjectiveMatrix::str() const {
  std::ostringstream os;
  os << '[' << a_ << ',' << b_ << ',' << c_ << ',' << d_ << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ProjectiveMatrix& m) { return os << m.str(); }

ProjectiveMatrix compose(const ProjectiveMatrix& m, const ProjectiveMatrix& n) {
  return ProjectiveMatrix(m.a() * n.a() + m.b() * n.c(), m.a() * n.b() + m.b() * n.d(),
                          m.c() * n.a() + m.d() * n.c(), m.c() * n.b() + m.d() * n.d());
}

ProjectiveMatrix inverse(const ProjectiveMatrix& m) {
  return ProjectiveMatrix(m.d(), -m.b(), -m.c(), m.a());
}

ProjectiveMatrix power(const ProjectiveMatrix& m, long n) {
  ProjectiveMatrix base = n < 0 ? inverse(m) : m;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  ProjectiveMatrix acc;
  while (e > 0) {
    if (e & 1UL) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1UL;
  }
  return acc;
}

ProjectiveMatrix conjugate(const ProjectiveMatrix& g, const ProjectiveMatrix& m) {
  return compose(g, compose(m, inverse(g)));
}

ProjectiveMatrix gen_matrix(Gen g) {
  switch (g) {
    case Gen::S: return ProjectiveMatrix(0, -1, 1, 0);
    case Gen::T: return ProjectiveMatrix(1, 1, 0, 1);
    case Gen::Tinv: return ProjectiveMatrix(1, -1, 0, 1);
    case Gen::L: return ProjectiveMatrix(1, 0, 1, 1);
    case Gen::Linv: return ProjectiveMatrix(1, 0, -1, 1);
  }
  return ProjectiveMatrix();
}

ProjectiveMatrix evaluate(const GroupWord& w) {
  ProjectiveMatrix acc;
  for (Gen g : w.letters()) acc = compose(acc, gen_matrix(g));
  return acc;
}

ProjectiveMatrix evaluate(const std::string& word_text) { return evaluate(parse_word(word_text)); }

IsometryClass classify(const ProjectiveMatrix& m) {
  if (m.is_identity()) return IsometryClass::Identity;
  Int t = abs(m.trace());
  if (t < 2) return IsometryClass::Elliptic;
  if (t == 2) return IsometryClass::Parabolic;
  return IsometryClass::Hyperbolic;
}

Int trace_of_power(const ProjectiveMatrix& m, long n) {
  if (n < 1) throw std::invalid_argument("trace_of_power: n must be positive");
  Int t = abs(m.trace());
  Int prev = 2, cur = t;  // traces of m^0, m^1 for the lift with trace |t|
  for (long k = 1; k < n; ++k) {
    Int next = t * cur - prev;
    prev = cur;
    cur = next;
  }
  return abs(cur);
}

double translation_length(const ProjectiveMatrix& m) {
  if (classify(m) != IsometryClass::Hyperbolic)
    fail(ErrorCode::NotHyperbolic, "translation length requires a hyperbolic element");
  double half_tr = to_double(abs(m.trace())) / 2.0;
  return 2.0 * std::acosh(half_tr);
}

ProjectiveMatrix parse_matrix(const std::string& text) {
  Int vals[4];
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c) fail(ErrorCode::SyntaxError, "matrix literal must be [a,b,c,d]");
    ++i;
  };
  expect('[');
  for (int k = 0; k < 4; ++k) {
    if (k > 0) expect(',');
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail(ErrorCode::SyntaxError, "matrix literal must be [a,b,c,d]");
    vals[k] = Int(text.substr(start, i - start));
  }
  expect(']');
  skip_ws();
  if (i != text.size()) fail(ErrorCode::SyntaxError, "trailing characters after matrix literal");
  try {
    return ProjectiveMatrix(vals[0], vals[1], vals[2], vals[3]);
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::SyntaxError, "matrix literal must have determinant 1");
  }
}

}  // namespace goldman
