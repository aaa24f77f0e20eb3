#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "goldman/boundary.hpp"
#include "goldman/subgroup.hpp"

namespace goldman {

/// One double coset XgY whose translated axes cross transversally.
/// rep has minimal Frobenius norm in the coset (lex tie-break);
/// sign = crossing_sign(axis(x), axis(rep y rep^-1));
/// term = x * (rep y rep^-1).
struct DoubleCosetRep {
  ProjectiveMatrix rep;
  int sign = 0;
  ProjectiveMatrix term;
};

/// Exponent m with power(x, m) == h, if one exists.
std::optional<long> exponent_of_power(const ProjectiveMatrix& h, const ProjectiveMatrix& x);

/// Witness (m, k) with power(x,m) * g * power(y,k) == g2, if the double
/// cosets XgY and Xg2Y coincide. Exact. Throws NotHyperbolic.
std::optional<std::pair<long, long>> same_double_coset(const ProjectiveMatrix& g,
                                                       const ProjectiveMatrix& g2,
                                                       const ProjectiveMatrix& x,
                                                       const ProjectiveMatrix& y);

/// The set I(x,y) of crossing double cosets, one canonical representative
/// each, sorted by rep. Cosets with coincident axes carry sign 0 and are
/// omitted. segment_shift slides the fundamental segment by whole periods
/// (used by the basepoint-independence tests).
std::vector<DoubleCosetRep> crossing_double_cosets(const ProjectiveMatrix& x,
                                                   const ProjectiveMatrix& y,
                                                   const SubgroupSpec& spec, int segment_shift = 0);

/// |I(x,y)| for non-conjugate inputs; 0 when either class is not hyperbolic.
long geometric_intersection_oracle(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                                   const SubgroupSpec& spec);

/// Half the number of crossing double cosets XgX; errors on an odd count.
long geometric_self_intersection_oracle(const ProjectiveMatrix& x, const SubgroupSpec& spec);

}  // namespace goldman
