#pragma once

#include <string>
#include <vector>

namespace goldman {

// Generator alphabet. S has order two, so it is its own inverse.
// R and r are aliases for T and t and are normalized away at parse time.
enum class Gen : unsigned char { S, T, Tinv, L, Linv };

Gen gen_inverse(Gen g);

/// Freely reduced word over {S, T, T^-1, L, L^-1}.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Gen> letters);

  const std::vector<Gen>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  void push(Gen g);  // keeps the word reduced
  GroupWord inverse() const;

  bool operator==(const GroupWord&) const = default;

 private:
  std::vector<Gen> letters_;
};

/// Parses the word grammar: tokens S T t L l R r, each optionally followed by
/// ^ and a signed decimal exponent; whitespace ignored.
/// Throws DomainError(SyntaxError) on malformed input.
GroupWord parse_word(const std::string& text);

/// Renders a word so that parse_word(render_word(w)) == w.
std::string render_word(const GroupWord& w);

}  // namespace goldman
