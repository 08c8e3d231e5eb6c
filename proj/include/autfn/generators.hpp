#pragma once

#include "autfn/endo.hpp"
#include "autfn/perm.hpp"

namespace autfn {

// Constructors for the named automorphisms of F_n.

// Left Nielsen move: a_i -> a_j a_i, everything else fixed.
Endo lambda(int i, int j, int n);

// Right Nielsen move: a_i -> a_i a_j.
Endo rho(int i, int j, int n);

// Involution inverting one generator: a_i -> a_i^{-1}.
Endo eps(int i, int n);

// Basis permutation: a_j -> a_{p(j)}. Under this convention
// perm_endo(p.then(q)) == compose(perm_endo(p), perm_endo(q)).
Endo perm_endo(const Perm& p, int n);

enum class Special { Iota, Z, Alpha, Beta, Theta };

// iota  = the transposition (1 2), any n >= 2.
// z     = eps(1) ... eps(n), inverts every generator.
// alpha = a1 -> a1', a2 -> a3 a1', a3 -> a2 a1'          (n = 3 only)
// beta  = a1 -> a3 a2', a2 -> a2', a3 -> a1 a2'          (n = 3 only)
// theta = fixes a1, a2 and sends a_i -> a2 a_i for i > 2 (n >= 3)
Endo special(Special s, int n);

// The rank-(n+1) symmetric group inside Aut(F_n):
//   a_i -> a_{tau(i)} a_{tau(n+1)}^{-1}   with a_{n+1} read as the empty word.
// tau must have size n+1. The map tau -> lemma3_embed(tau, n) is a
// homomorphism for left-to-right composition on both sides.
Endo lemma3_embed(const Perm& tau, int n);

}  // namespace autfn
