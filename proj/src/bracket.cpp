#include "goldman/bracket.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "goldman/errors.hpp"

namespace goldman {

long BracketSum::manhattan() const {
  long total = 0;
  for (const auto& e : entries_) total += e.coeff < 0 ? -e.coeff : e.coeff;
  return total;
}

BracketSum BracketSum::negated() const {
  BracketSum out = *this;
  for (auto& e : out.entries_) e.coeff = -e.coeff;
  for (auto& t : out.pre_grouping_) t.sign = -t.sign;
  return out;
}

bool BracketSum::same_grouped(const BracketSum& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i].cls == other.entries_[i].cls)) return false;
    if (entries_[i].coeff != other.entries_[i].coeff) return false;
  }
  return true;
}

BracketSum BracketSum::group(std::vector<BracketTerm> terms, const SubgroupSpec& spec) {
  BracketSum out;
  if (spec.is_full()) {
    std::map<std::string, ConjugacyClass> cache;
    for (auto& t : terms) {
      auto it = cache.find(t.rep.str());
      if (it == cache.end())
        it = cache.emplace(t.rep.str(), conjugacy_class(t.rep, SubgroupSpec::full())).first;
      t.cls = it->second;
    }
  } else {
    // Group pairwise by subgroup conjugacy; label each class by the full-group
    // word plus its lexicographically least representative seen.
    std::sort(terms.begin(), terms.end(),
              [](const BracketTerm& a, const BracketTerm& b) { return a.rep < b.rep; });
    struct Bucket {
      ProjectiveMatrix least;
      ConjugacyClass cls;
      std::vector<std::size_t> members;
    };
    std::vector<Bucket> buckets;
    std::map<std::string, std::size_t> rep_seen;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      auto known = rep_seen.find(terms[i].rep.str());
      if (known != rep_seen.end()) {
        buckets[known->second].members.push_back(i);
        continue;
      }
      bool placed = false;
      for (std::size_t b = 0; b < buckets.size() && !placed; ++b) {
        if (are_conjugate(terms[i].rep, buckets[b].least, spec)) {
          buckets[b].members.push_back(i);
          rep_seen.emplace(terms[i].rep.str(), b);
          placed = true;
        }
      }
      if (!placed) {
        ConjugacyClass cls{IsometryClass::Hyperbolic, rl_normal_form(terms[i].rep).word.letters,
                           terms[i].rep.str()};
        buckets.push_back(Bucket{terms[i].rep, std::move(cls), {i}});
        rep_seen.emplace(terms[i].rep.str(), buckets.size() - 1);
      }
    }
    for (const auto& b : buckets)
      for (std::size_t i : b.members) terms[i].cls = b.cls;
  }

  std::map<ConjugacyClass, Entry> grouped;
  for (const auto& t : terms) {
    auto [it, fresh] = grouped.try_emplace(t.cls, Entry{t.cls, 0, t.rep});
    it->second.coeff += t.sign;
    if (!fresh && t.rep < it->second.rep) it->second.rep = t.rep;
  }
  for (auto& [cls, entry] : grouped)
    if (entry.coeff != 0) out.entries_.push_back(entry);
  out.pre_grouping_ = std::move(terms);
  return out;
}

namespace {

void require_members(const SubgroupSpec& spec, std::initializer_list<const ProjectiveMatrix*> ms) {
  for (const ProjectiveMatrix* m : ms)
    if (!is_member(spec, *m)) fail(ErrorCode::NotMember, "input must belong to the subgroup");
}

bool both_hyperbolic(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
  return classify(x) == IsometryClass::Hyperbolic && classify(y) == IsometryClass::Hyperbolic;
}

}  // namespace

BracketSum bracket(const ProjectiveMatrix& x, const ProjectiveMatrix& y, const SubgroupSpec& spec) {
  require_members(spec, {&x, &y});
  if (!both_hyperbolic(x, y)) return BracketSum{};
  std::vector<BracketTerm> terms;
  for (const auto& dc : crossing_double_cosets(x, y, spec))
    terms.push_back(BracketTerm{dc.sign, {}, dc.term});
  return BracketSum::group(std::move(terms), spec);
}

BracketSum bracket_of_powers(const ProjectiveMatrix& x, const ProjectiveMatrix& y, long p, long q,
                             const SubgroupSpec& spec) {
  if (p < 1 || q < 1) throw std::invalid_argument("bracket_of_powers: p, q must be positive");
  require_members(spec, {&x, &y});
  if (!both_hyperbolic(x, y)) return BracketSum{};
  ProjectiveMatrix xp = power(x, p);
  std::vector<BracketTerm> terms;
  for (const auto& dc : crossing_double_cosets(x, y, spec)) {
    ProjectiveMatrix term = compose(xp, power(conjugate(dc.rep, y), q));
    for (long copy = 0; copy < p * q; ++copy) terms.push_back(BracketTerm{dc.sign, {}, term});
  }
  return BracketSum::group(std::move(terms), spec);
}

long manhattan_norm(const BracketSum& s) { return s.manhattan(); }

BracketSum jacobi_defect(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                         const ProjectiveMatrix& z, const SubgroupSpec& spec) {
  require_members(spec, {&x, &y, &z});
  std::vector<BracketTerm> all;
  auto nest = [&](const ProjectiveMatrix& a, const ProjectiveMatrix& b, const ProjectiveMatrix& c) {
    BracketSum inner = bracket(a, b, spec);
    for (const auto& e : inner.entries()) {
      BracketSum outer = bracket(e.rep, c, spec);
      long copies = e.coeff < 0 ? -e.coeff : e.coeff;
      int inner_sign = e.coeff < 0 ? -1 : 1;
      for (const auto& t : outer.pre_grouping())
        for (long r = 0; r < copies; ++r)
          all.push_back(BracketTerm{inner_sign * t.sign, {}, t.rep});
    }
  };
  nest(x, y, z);
  nest(y, z, x);
  nest(z, x, y);
  return BracketSum::group(std::move(all), spec);
}

}  // namespace goldman
