#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autfn/endo.hpp"
#include "autfn/perm.hpp"

namespace autfn {

inline constexpr long kDefaultStepBudget = 1'000'000;

enum class MoveKind { ReplaceLeft, ReplaceRight, InvertEntry, SwapEntries };

// A tuple-level elementary Nielsen transformation:
//   ReplaceLeft  : w_i <- w_j^{sign} w_i
//   ReplaceRight : w_i <- w_i w_j^{sign}
//   InvertEntry  : w_i <- w_i^{-1}            (j, sign unused)
//   SwapEntries  : w_i <-> w_j                (sign unused)
struct ElementaryMove {
  MoveKind kind;
  int i = 0;
  int j = 0;
  int sign = +1;
  friend bool operator==(const ElementaryMove&, const ElementaryMove&) = default;
};

// The automorphism whose pre-composition effects the move on an image tuple:
// replaying moves m_1..m_K on images(f) yields images of m_K ... m_1 f.
Endo move_endo(const ElementaryMove& m, int n);

std::vector<Word> apply_move(std::vector<Word> tuple, const ElementaryMove& m);

enum class Verdict { Automorphism, NotAutomorphism };

struct Certificate {
  Verdict verdict;
  std::vector<ElementaryMove> moves;  // in application order
  std::vector<Word> final_tuple;
  bool is_automorphism() const { return verdict == Verdict::Automorphism; }
};

// Nielsen reduction of a basis-image tuple. Replace moves that strictly
// decrease total letter count are applied first-match in a fixed scan
// order (pairs (i, j) lexicographic, sign + before -, left before right,
// rescanning from the start after each application). When none exists,
// length-preserving replace moves that shrink the affected word's
// half-word key are applied; these cross the equal-cancellation peaks
// that strict descent alone cannot (without them, genuine bases can
// stall: (a4'a2', a1', a4'a3'a2', a4'a2a3a2') admits no shortening move).
// A fully stalled tuple is Nielsen reduced, so it is an automorphism
// image iff it consists of n single letters with distinct indices;
// InvertEntry/SwapEntries moves then normalize it to (a_1, ..., a_n).
//
// Throws StepBudgetExceeded when more than step_budget moves are needed;
// that is a resource condition, not a verdict.
Certificate nielsen_reduce(const std::vector<Word>& tuple,
                           long step_budget = kDefaultStepBudget);

bool is_automorphism(const Endo& f, long step_budget = kDefaultStepBudget);

// Throws NotAnAutomorphism. The result is verified against
// compose(f, inverse(f)) == identity == compose(inverse(f), f).
Endo inverse(const Endo& f, long step_budget = kDefaultStepBudget);

// One elementary generator: lambda(i, j), rho(i, j), eps(i) or a basis
// permutation. Factorizations are sequences of these, never of their
// formal inverses (inverse Nielsen moves expand as eps j . move . eps j).
struct ElementaryFactor {
  enum class Kind { Lambda, Rho, Eps, PermFactor };
  Kind kind;
  int i = 0;
  int j = 0;
  std::optional<Perm> perm;

  Endo to_endo(int n) const;
  std::string expr_string() const;  // renders in the CLI expression grammar
};

// Left-to-right composition of the returned factors equals f.
// Throws NotAnAutomorphism.
std::vector<ElementaryFactor> factor_into_elementary(const Endo& f,
                                                     long step_budget = kDefaultStepBudget);

Endo compose_factors(const std::vector<ElementaryFactor>& factors, int n);

}  // namespace autfn
