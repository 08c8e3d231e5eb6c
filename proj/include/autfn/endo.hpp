#pragma once

#include <string>
#include <vector>

#include "autfn/matrix.hpp"
#include "autfn/word.hpp"

namespace autfn {

inline constexpr long kDefaultOrderCap = 10'000;

// An endomorphism of F_n, given by the images of the basis: image(i) is
// where a_i goes. Automorphisms are the invertible ones (see nielsen.hpp).
//
// The whole library uses the right-action convention: a product "f then g"
// means apply f first. compose(f, g) is "f then g", so
//   apply(compose(f, g), w) == apply(g, apply(f, w)).
class Endo {
 public:
  Endo(int rank, std::vector<Word> images);  // RankMismatch on incoherent input
  static Endo identity(int rank);

  int rank() const { return rank_; }
  const Word& image(int i) const;  // 1-based: image of a_i
  const std::vector<Word>& images() const { return images_; }

  bool is_identity() const;
  std::string str() const;  // "a1 -> w1 ; a2 -> w2 ; ..."

  friend bool operator==(const Endo&, const Endo&) = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

// Image words compared entrywise (rank first, then shortlex per word).
int compare(const Endo& a, const Endo& b);
inline bool operator<(const Endo& a, const Endo& b) { return compare(a, b) < 0; }

// Substitutes images(f) into w and reduces. Throws RankMismatch.
Word apply(const Endo& f, const Word& w);

// "f then g" under the right-action convention.
Endo compose(const Endo& f, const Endo& g);

// k-fold composition; power(f, 0) is the identity. Negative k inverts
// first and throws NotAnAutomorphism when f is not invertible.
Endo power(const Endo& f, long k);

// Two endomorphisms of F_n agree iff they agree on the basis.
inline bool equals(const Endo& f, const Endo& g) { return f == g; }

// Row i is exponent_sums(image(i)), so abelianize(compose(f, g)) equals
// mul(abelianize(f), abelianize(g)) with no transpose.
IntMatrix abelianize(const Endo& f);

// Least k in 1..cap with power(f, k) = identity, else OrderCapExceeded.
long order_with_cap(const Endo& f, long cap = kDefaultOrderCap);

}  // namespace autfn
