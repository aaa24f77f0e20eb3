#include "goldman/word.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>

#include "goldman/errors.hpp"

namespace goldman {

Gen gen_inverse(Gen g) {
  switch (g) {
    case Gen::S: return Gen::S;
    case Gen::T: return Gen::Tinv;
    case Gen::Tinv: return Gen::T;
    case Gen::L: return Gen::Linv;
    case Gen::Linv: return Gen::L;
  }
  return Gen::S;
}

GroupWord::GroupWord(std::vector<Gen> letters) {
  for (Gen g : letters) push(g);
}

void GroupWord::push(Gen g) {
  if (!letters_.empty() && letters_.back() == gen_inverse(g)) {
    letters_.pop_back();
    return;
  }
  letters_.push_back(g);
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push(gen_inverse(*it));
  return out;
}

namespace {

std::optional<Gen> token_of(char c) {
  switch (c) {
    case 'S': return Gen::S;
    case 'T': case 'R': return Gen::T;
    case 't': case 'r': return Gen::Tinv;
    case 'L': return Gen::L;
    case 'l': return Gen::Linv;
    default: return std::nullopt;
  }
}

}  // namespace

GroupWord parse_word(const std::string& text) {
  GroupWord word;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    auto tok = token_of(c);
    if (!tok) fail(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'");
    ++i;
    long exponent = 1;
    if (i < n && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
      std::size_t digits = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++digits;
      }
      if (digits == 0) fail(ErrorCode::SyntaxError, "malformed exponent");
      if (digits > 6) fail(ErrorCode::SyntaxError, "exponent out of range");
      exponent = std::strtol(text.substr(start, i - start).c_str(), nullptr, 10);
    }
    Gen g = *tok;
    if (exponent < 0) {
      g = gen_inverse(g);
      exponent = -exponent;
    }
    for (long k = 0; k < exponent; ++k) word.push(g);
  }
  return word;
}

std::string render_word(const GroupWord& w) {
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t run = 1;
    while (i + run < ls.size() && ls[i + run] == ls[i]) ++run;
    char c = 'S';
    switch (ls[i]) {
      case Gen::S: c = 'S'; break;
      case Gen::T: c = 'T'; break;
      case Gen::Tinv: c = 't'; break;
      case Gen::L: c = 'L'; break;
      case Gen::Linv: c = 'l'; break;
    }
    out += c;
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

}  // namespace goldman
