#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "autfn/errors.hpp"

namespace autfn {

// One basis letter a_i (sign = +1) or its inverse a_i^{-1} (sign = -1).
// Indices are 1-based throughout the library.
struct Letter {
  int index;
  int sign;
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.index, -l.sign}; }

// Letter order used by shortlex word comparison: a1 < a1' < a2 < a2' < ...
inline int compare(Letter a, Letter b) {
  if (a.index != b.index) return a.index < b.index ? -1 : 1;
  if (a.sign != b.sign) return a.sign > b.sign ? -1 : 1;
  return 0;
}

// A freely reduced word over the basis {a_1, ..., a_n}. Immutable; the
// empty word is the identity of F_n. Every word carries its ambient rank
// so cross-rank mistakes surface early.
class Word {
 public:
  explicit Word(int rank);

  // Free reduction of an arbitrary letter sequence (single stack pass).
  // Throws IndexOutOfRank if a letter index is outside 1..rank.
  static Word reduced(const std::vector<Letter>& raw, int rank);

  // The single-letter word a_index^{sign}.
  static Word generator(int index, int rank, int sign = +1);

  // CLI word syntax: letters `a1`, inverses `a2'`, whitespace-separated,
  // the empty word spelled `1`.
  static Word parse(std::string_view text, int rank);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Word(int rank, std::vector<Letter> already_reduced);

  int rank_;
  std::vector<Letter> letters_;
};

// Rank first, then shortlex (length, then letter order).
int compare(const Word& a, const Word& b);
inline bool operator<(const Word& a, const Word& b) { return compare(a, b) < 0; }

// Freely reduced product u v. Throws RankMismatch.
Word concat(const Word& u, const Word& v);

// Reversed word with all signs flipped; concat(w, invert(w)) is empty.
Word invert(const Word& w);

// Entry i-1 is the signed count of letters with index i.
std::vector<long long> exponent_sums(const Word& w);

// Number of letter pairs cancelling at the junction of u·v, so that
// concat(u, v).length() == u.length() + v.length() - 2*cancellation(u, v).
int cancellation(const Word& u, const Word& v);

}  // namespace autfn
