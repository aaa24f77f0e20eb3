#pragma once

#include <vector>

#include "goldman/conjugacy.hpp"
#include "goldman/cosets.hpp"

namespace goldman {

struct BracketTerm {
  int sign = 1;
  ConjugacyClass cls;
  ProjectiveMatrix rep;
};

/// Integer-coefficient formal sum of conjugacy classes, with the pre-grouping
/// term multiset retained.
class BracketSum {
 public:
  struct Entry {
    ConjugacyClass cls;
    long coeff = 0;
    ProjectiveMatrix rep;  // one representative of the class
  };

  BracketSum() = default;

  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<BracketTerm>& pre_grouping() const { return pre_grouping_; }
  long pre_grouping_count() const { return static_cast<long>(pre_grouping_.size()); }
  bool zero() const { return entries_.empty(); }
  long manhattan() const;

  BracketSum negated() const;
  bool same_grouped(const BracketSum& other) const;  // equal coefficient maps

  static BracketSum group(std::vector<BracketTerm> terms, const SubgroupSpec& spec);

 private:
  std::vector<Entry> entries_;  // sorted by cls, nonzero coefficients
  std::vector<BracketTerm> pre_grouping_;
};

/// [<x>,<y>] assembled from crossing double cosets. Non-hyperbolic inputs
/// yield the empty sum.
BracketSum bracket(const ProjectiveMatrix& x, const ProjectiveMatrix& y, const SubgroupSpec& spec);

/// [<x^p>,<y^q>] via the collation identity: I(x,y) computed once, each
/// coset contributing p*q copies of sign * <x^p (y^b)^q>.
BracketSum bracket_of_powers(const ProjectiveMatrix& x, const ProjectiveMatrix& y, long p, long q,
                             const SubgroupSpec& spec);

long manhattan_norm(const BracketSum& s);

/// [[x,y],z] + [[y,z],x] + [[z,x],y]; always the empty sum.
BracketSum jacobi_defect(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                         const ProjectiveMatrix& z, const SubgroupSpec& spec);

}  // namespace goldman
