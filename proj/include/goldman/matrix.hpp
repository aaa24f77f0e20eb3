#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include "goldman/word.hpp"

namespace goldman {

using Int = mpz_class;

enum class IsometryClass { Identity, Elliptic, Parabolic, Hyperbolic };

const char* isometry_class_name(IsometryClass k);

/// Element of PSL(2,Z): integer matrix [[a,b],[c,d]] with det 1, stored in the
/// sign-canonical form where (a,b,c,d) >= (-a,-b,-c,-d) lexicographically,
/// i.e. the first nonzero entry is positive.
class ProjectiveMatrix {
 public:
  ProjectiveMatrix() : a_(1), b_(0), c_(0), d_(1) {}
  ProjectiveMatrix(Int a, Int b, Int c, Int d);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  Int trace() const { return a_ + d_; }
  Int frobenius_sq() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }
  bool is_identity() const;

  bool operator==(const ProjectiveMatrix& o) const;
  bool operator!=(const ProjectiveMatrix& o) const { return !(*this == o); }
  // Lexicographic order on canonical entries; used for deterministic output.
  bool operator<(const ProjectiveMatrix& o) const;

  std::string str() const;  // "[a,b,c,d]"

 private:
  Int a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const ProjectiveMatrix& m);

ProjectiveMatrix compose(const ProjectiveMatrix& m, const ProjectiveMatrix& n);
ProjectiveMatrix inverse(const ProjectiveMatrix& m);
ProjectiveMatrix power(const ProjectiveMatrix& m, long n);
ProjectiveMatrix conjugate(const ProjectiveMatrix& g, const ProjectiveMatrix& m);  // g m g^-1

// Generator matrices: T = [[1,1],[0,1]], S = [[0,-1],[1,0]], L = [[1,0],[1,1]].
ProjectiveMatrix gen_matrix(Gen g);
ProjectiveMatrix evaluate(const GroupWord& w);
ProjectiveMatrix evaluate(const std::string& word_text);

IsometryClass classify(const ProjectiveMatrix& m);

/// |trace(m^n)| for n >= 1, via the two-term trace recurrence.
Int trace_of_power(const ProjectiveMatrix& m, long n);

/// Hyperbolic translation length 2*arccosh(|tr|/2). Throws NotHyperbolic.
double translation_length(const ProjectiveMatrix& m);

/// Parses "[a,b,c,d]" with signed decimal integers.
ProjectiveMatrix parse_matrix(const std::string& text);

double to_double(const Int& v);
int sign_of(const Int& v);

}  // namespace goldman
