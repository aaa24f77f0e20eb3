#pragma once

#include <string>

#include "goldman/matrix.hpp"

namespace goldman {

/// Congruence subgroup selector: the full group or Gamma0/Gamma1/Gamma(N).
struct SubgroupSpec {
  enum class Kind { Full, Gamma0, Gamma1, GammaPrincipal };

  Kind kind = Kind::Full;
  long level = 1;

  static SubgroupSpec full() { return {}; }
  static SubgroupSpec gamma0(long n) { return {Kind::Gamma0, n}; }
  static SubgroupSpec gamma1(long n) { return {Kind::Gamma1, n}; }
  static SubgroupSpec gamma(long n) { return {Kind::GammaPrincipal, n}; }

  bool is_full() const { return kind == Kind::Full || level == 1; }
  std::string str() const;

  bool operator==(const SubgroupSpec&) const = default;
};

bool is_member(const SubgroupSpec& spec, const ProjectiveMatrix& m);

/// Membership decided on residues mod the level; lhs entries are any integer
/// lift of the matrix. Used by the subgroup conjugacy scan.
bool is_member_residue(const SubgroupSpec& spec, long a, long b, long c, long d);

/// Parses "full" | "gamma0:N" | "gamma1:N" | "gamma:N".
SubgroupSpec parse_subgroup(const std::string& text);

}  // namespace goldman
