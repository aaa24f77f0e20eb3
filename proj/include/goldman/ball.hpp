#pragma once

#include <vector>

#include "goldman/subgroup.hpp"

namespace goldman {

/// All subgroup members m with d(i, m*i) <= radius, i.e. with
/// ||m||_F^2 <= ceil(2 cosh radius); sorted lexicographically.
struct Ball {
  double radius = 0.0;
  SubgroupSpec spec;
  std::vector<ProjectiveMatrix> elements;

  bool contains(const ProjectiveMatrix& m) const;
};

Ball enumerate_ball(double radius, const SubgroupSpec& spec);

}  // namespace goldman
