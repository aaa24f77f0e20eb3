#pragma once

#include <optional>
#include <string>
#include <utility>

#include "goldman/boundary.hpp"
#include "goldman/subgroup.hpp"

namespace goldman {

/// Nonempty word over {L,R} considered up to rotation; stored in the
/// lexicographically least rotation (L < R).
struct CyclicWord {
  std::string letters;

  bool operator==(const CyclicWord&) const = default;
  bool operator<(const CyclicWord& o) const { return letters < o.letters; }
};

std::string least_rotation(const std::string& s);

struct RLNormalForm {
  CyclicWord word;
  ProjectiveMatrix conjugator;  // conjugator * m * conjugator^-1 == evaluate(word)
};

/// L/R normal form of a hyperbolic element. Throws NotHyperbolic.
RLNormalForm rl_normal_form(const ProjectiveMatrix& m);

/// (m0, n) with power(m0, n) == m and m0 not a proper power. Throws NotHyperbolic.
std::pair<ProjectiveMatrix, long> primitive_root(const ProjectiveMatrix& m);

/// Canonical name of a conjugacy class.
/// payload: hyperbolic -> L/R word; elliptic -> "S"|"ST"|"STST";
/// parabolic -> "R:n" | "L:n"; identity -> "".
/// orbit: canonical orbit representative under a proper congruence subgroup.
struct ConjugacyClass {
  IsometryClass kind = IsometryClass::Identity;
  std::string payload;
  std::string orbit;

  std::string name() const;
  bool operator==(const ConjugacyClass&) const = default;
  bool operator<(const ConjugacyClass& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (payload != o.payload) return payload < o.payload;
    return orbit < o.orbit;
  }
};

ConjugacyClass conjugacy_class(const ProjectiveMatrix& m, const SubgroupSpec& spec);

/// Conjugator witness g with g m g^-1 == n when the classes agree, nullopt
/// otherwise. Throws NotMember / UnsupportedClassKind as documented.
std::optional<ProjectiveMatrix> are_conjugate(const ProjectiveMatrix& m, const ProjectiveMatrix& n,
                                              const SubgroupSpec& spec);

/// Scans every g in enumerate_ball(radius, spec) in canonical order for
/// g m g^-1 == n. A hit is definitive; a miss only bounds conjugator size.
std::optional<ProjectiveMatrix> brute_force_conjugacy_oracle(const ProjectiveMatrix& m,
                                                             const ProjectiveMatrix& n,
                                                             const SubgroupSpec& spec, double radius);

}  // namespace goldman
