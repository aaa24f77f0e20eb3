#include "goldman/intersection.hpp"

#include <stdexcept>

#include "goldman/errors.hpp"

namespace goldman {

namespace {

// Manhattan norm of sum_b sign(b) <x^p (y^b)^q> over grouped classes.
long collapsed_norm(const std::vector<DoubleCosetRep>& cosets, const ProjectiveMatrix& xp, long q,
                    const ProjectiveMatrix& y, const SubgroupSpec& spec) {
  std::vector<BracketTerm> terms;
  terms.reserve(cosets.size());
  for (const auto& dc : cosets)
    terms.push_back(BracketTerm{dc.sign, {}, compose(xp, power(conjugate(dc.rep, y), q))});
  return BracketSum::group(std::move(terms), spec).manhattan();
}

void require_members(const SubgroupSpec& spec, const ProjectiveMatrix& x,
                     const ProjectiveMatrix& y) {
  if (!is_member(spec, x) || !is_member(spec, y))
    fail(ErrorCode::NotMember, "input must belong to the subgroup");
}

IntersectionReport central_report() { return IntersectionReport{0, 1, 1, 0, 0, true, true}; }

}  // namespace

IntersectionReport intersection_number(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                                       const SubgroupSpec& spec, long p_max) {
  require_members(spec, x, y);
  if (classify(x) != IsometryClass::Hyperbolic || classify(y) != IsometryClass::Hyperbolic)
    return central_report();
  if (are_conjugate(x, y, spec))
    fail(ErrorCode::ConjugateInputs, "intersection number requires non-conjugate classes");
  auto cosets = crossing_double_cosets(x, y, spec);
  long oracle = static_cast<long>(cosets.size());
  Int ty = trace_of_power(y, 1);
  long prev = -1;
  bool prev_valid = false;
  for (long p = 1; p <= p_max; ++p) {
    if (trace_of_power(x, p) == ty) continue;  // p tau_x == q tau_y, inadmissible
    long value = collapsed_norm(cosets, power(x, p), 1, y, spec);
    if (prev_valid && value == prev && value == oracle)
      return IntersectionReport{value, p, 1, p * value, oracle, true, true};
    prev = value;
    prev_valid = true;
  }
  fail(ErrorCode::NoStabilization, "no two consecutive admissible exponents agreed with the oracle");
}

std::vector<std::pair<long, long>> mutual_value_series(const ProjectiveMatrix& x,
                                                       const ProjectiveMatrix& y,
                                                       const SubgroupSpec& spec, long p_max) {
  require_members(spec, x, y);
  if (classify(x) != IsometryClass::Hyperbolic || classify(y) != IsometryClass::Hyperbolic)
    return {};
  auto cosets = crossing_double_cosets(x, y, spec);
  Int ty = trace_of_power(y, 1);
  std::vector<std::pair<long, long>> out;
  for (long p = 1; p <= p_max; ++p) {
    if (trace_of_power(x, p) == ty) continue;
    out.emplace_back(p, collapsed_norm(cosets, power(x, p), 1, y, spec));
  }
  return out;
}

IntersectionReport self_intersection_number(const ProjectiveMatrix& x, const SubgroupSpec& spec,
                                            long q_max) {
  if (!is_member(spec, x)) fail(ErrorCode::NotMember, "input must belong to the subgroup");
  if (classify(x) != IsometryClass::Hyperbolic) return central_report();
  if (primitive_root(x).second != 1)
    fail(ErrorCode::NotPrimitive, "self-intersection requires a primitive element");
  auto cosets = crossing_double_cosets(x, x, spec);
  long count = static_cast<long>(cosets.size());
  if (count % 2 != 0) fail(ErrorCode::OddCosetCount, "unpaired self-crossing double coset");
  long oracle = count / 2;
  long prev = -1;
  bool prev_valid = false;
  for (long q = 2; q <= q_max; ++q) {
    for (long p = 1; p < q; ++p) {
      long m = collapsed_norm(cosets, power(x, p), q, x, spec);
      if (m % 2 != 0) {
        prev_valid = false;  // value M/(2pq) is not integral at this pair
        continue;
      }
      long value = m / 2;
      if (prev_valid && value == prev && value == oracle)
        return IntersectionReport{value, p, q, p * q * (m / 2), oracle, true, true};
      prev = value;
      prev_valid = true;
    }
  }
  fail(ErrorCode::NoStabilization, "no two consecutive admissible pairs agreed with the oracle");
}

std::optional<long> min_noncancel_exponent(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                                           long q, long p_max, const SubgroupSpec& spec) {
  if (q < 1 || p_max < 1) throw std::invalid_argument("min_noncancel_exponent: q, p_max >= 1");
  require_members(spec, x, y);
  Int ty = trace_of_power(y, q);
  if (classify(x) != IsometryClass::Hyperbolic || classify(y) != IsometryClass::Hyperbolic) {
    // Empty brackets: vacuously no cancellation at the first admissible p.
    for (long p = 1; p <= p_max; ++p)
      if (trace_of_power(x, p) != ty) return p;
    return std::nullopt;
  }
  if (are_conjugate(x, y, spec))
    fail(ErrorCode::ConjugateInputs, "min_noncancel_exponent requires non-conjugate classes");
  auto cosets = crossing_double_cosets(x, y, spec);
  long size = static_cast<long>(cosets.size());
  for (long p = 1; p <= p_max; ++p) {
    if (trace_of_power(x, p) == ty) continue;
    if (collapsed_norm(cosets, power(x, p), q, y, spec) == size) return p;
  }
  return std::nullopt;
}

}  // namespace goldman
