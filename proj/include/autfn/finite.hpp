#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autfn/endo.hpp"
#include "autfn/matrix.hpp"
#include "autfn/perm.hpp"

namespace autfn {

inline constexpr long kDefaultClosureCap = 100'000;

// A finite set of endomorphisms in canonical sorted order (entrywise
// shortlex on image words), duplicate-free.
struct EndoSet {
  int rank = 0;
  std::vector<Endo> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Endo& e) const;
};

// Same shape for mod-m matrix groups.
struct ModMatrixSet {
  int dim = 0;
  unsigned modulus = 2;
  std::vector<ModMatrix> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const ModMatrix& m) const;
};

// Smallest compose-closed set containing the generators and the identity,
// by breadth-first products. Throws ClosureCapExceeded past cap elements.
EndoSet closure(const std::vector<Endo>& gens, int rank, long cap = kDefaultClosureCap);

// The signed-permutation subgroup W_n generated by all eps(i) and the
// adjacent transpositions; |W_n| = 2^n n!.
EndoSet build_Wn(int n, long cap = kDefaultClosureCap);

// { lemma3_embed(tau) : tau in S_{n+1} }; (n+1)! elements, closed under
// composition, meeting W_n exactly in the permutations fixing n+1.
EndoSet build_Sigma(int n);

enum class Vec2Label { Trivial, Diag, EvenWeight, Full, Other };
std::string to_string(Vec2Label label);

// A subgroup of (Z/2)^n stored as explicit sorted bit-vectors
// (bit i-1 is coordinate i), always containing zero.
struct Vec2Subgroup {
  int n = 0;
  std::vector<std::uint32_t> elements;
  Vec2Label label = Vec2Label::Other;

  std::size_t size() const { return elements.size(); }
  bool contains(std::uint32_t v) const;
};

// All subgroups of (Z/2)^n invariant under coordinate permutation,
// by brute force over spans of weight-class unions. n <= 12.
// Labels: trivial {0}; diag {0, all-ones}; even_weight (all even-weight
// vectors); full; other.
std::vector<Vec2Subgroup> sn_invariant_subgroups(int n);

// Closure of the mod-2 abelianizations of gens inside GL(n, 2).
ModMatrixSet gl2_shadow(int n, const std::vector<Endo>& gens,
                        long cap = kDefaultClosureCap);

// Smallest normal subgroup of the (finite) ambient group containing x.
// Throws ElementNotInGroup.
EndoSet normal_closure_in_finite(const EndoSet& group, const Endo& x);
ModMatrixSet normal_closure_in_finite(const ModMatrixSet& group, const ModMatrix& x);

}  // namespace autfn
