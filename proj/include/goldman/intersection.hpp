#pragma once

#include <optional>
#include <vector>

#include "goldman/bracket.hpp"

namespace goldman {

struct IntersectionReport {
  long value = 0;
  long p_used = 1;
  long q_used = 1;
  long norm = 0;
  long oracle = 0;
  bool agreed = false;
  bool stabilized = false;
};

/// Geometric intersection number via bracket norms: q = 1, p iterated over
/// exponents with trace_of_power(x,p) != trace_of_power(y,1), stopping when
/// two consecutive admissible exponents agree and match the double-coset
/// oracle. Throws NoStabilization past p_max.
IntersectionReport intersection_number(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                                       const SubgroupSpec& spec, long p_max = 12);

/// Self-intersection number via M[x^p,x^q]/(2pq) over pairs p < q.
IntersectionReport self_intersection_number(const ProjectiveMatrix& x, const SubgroupSpec& spec,
                                            long q_max = 12);

/// Smallest admissible p <= p_max whose bracket of powers has no
/// cancellation (Manhattan norm equals the pre-grouping count).
std::optional<long> min_noncancel_exponent(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                                           long q, long p_max, const SubgroupSpec& spec);

/// (p, value) for each admissible p; test hook for stabilization behavior.
std::vector<std::pair<long, long>> mutual_value_series(const ProjectiveMatrix& x,
                                                       const ProjectiveMatrix& y,
                                                       const SubgroupSpec& spec, long p_max);

}  // namespace goldman
