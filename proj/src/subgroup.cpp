#include "goldman/subgroup.hpp"

#include "goldman/errors.hpp"

namespace goldman {

namespace {

long residue(const Int& v, long n) {
  Int r = v % n;
  long out = r.get_si();
  if (out < 0) out += n;
  return out;
}

long residue(long v, long n) {
  long out = v % n;
  if (out < 0) out += n;
  return out;
}

template <typename E>
bool member_impl(const SubgroupSpec& spec, const E& a, const E& b, const E& c, const E& d) {
  if (spec.is_full()) return true;
  long n = spec.level;
  long ra = residue(a, n), rb = residue(b, n), rc = residue(c, n), rd = residue(d, n);
  switch (spec.kind) {
    case SubgroupSpec::Kind::Full:
      return true;
    case SubgroupSpec::Kind::Gamma0:
      return rc == 0;
    case SubgroupSpec::Kind::Gamma1:
      return rc == 0 && ((ra == 1 && rd == 1) || (ra == residue(-1L, n) && rd == residue(-1L, n)));
    case SubgroupSpec::Kind::GammaPrincipal:
      return rb == 0 && rc == 0 &&
             ((ra == 1 && rd == 1) || (ra == residue(-1L, n) && rd == residue(-1L, n)));
  }
  return false;
}

}  // namespace

std::string SubgroupSpec::str() const {
  switch (kind) {
    case Kind::Full: return "full";
    case Kind::Gamma0: return "gamma0:" + std::to_string(level);
    case Kind::Gamma1: return "gamma1:" + std::to_string(level);
    case Kind::GammaPrincipal: return "gamma:" + std::to_string(level);
  }
  return "full";
}

bool is_member(const SubgroupSpec& spec, const ProjectiveMatrix& m) {
  return member_impl(spec, m.a(), m.b(), m.c(), m.d());
}

bool is_member_residue(const SubgroupSpec& spec, long a, long b, long c, long d) {
  return member_impl(spec, a, b, c, d);
}

SubgroupSpec parse_subgroup(const std::string& text) {
  if (text == "full") return SubgroupSpec::full();
  auto parse_level = [&](std::size_t prefix_len) -> long {
    std::string rest = text.substr(prefix_len);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::SyntaxError, "subgroup level must be a positive integer");
    long n = std::strtol(rest.c_str(), nullptr, 10);
    if (n < 1) fail(ErrorCode::SyntaxError, "subgroup level must be >= 1");
    return n;
  };
  if (text.rfind("gamma0:", 0) == 0) return SubgroupSpec::gamma0(parse_level(7));
  if (text.rfind("gamma1:", 0) == 0) return SubgroupSpec::gamma1(parse_level(7));
  if (text.rfind("gamma:", 0) == 0) return SubgroupSpec::gamma(parse_level(6));
  fail(ErrorCode::SyntaxError, "subgroup must be full|gamma0:N|gamma1:N|gamma:N");
}

}  // namespace goldman
