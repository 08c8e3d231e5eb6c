#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "autfn/endo.hpp"
#include "autfn/generators.hpp"

namespace autfn {

enum class ConjOrientation { Left, Right };  // g x g^{-1} vs g^{-1} x g

// Symbolic expression over the named generators. Juxtaposition composes
// left to right (apply-order); [x, y] = x y x^{-1} y^{-1}.
class GenExpr {
 public:
  using Ptr = std::shared_ptr<const GenExpr>;
  using Cycles = std::vector<std::vector<int>>;  // 1-based cycle notation

  struct LambdaAtom {
    int i, j;
    friend bool operator==(const LambdaAtom&, const LambdaAtom&) = default;
  };
  struct RhoAtom {
    int i, j;
    friend bool operator==(const RhoAtom&, const RhoAtom&) = default;
  };
  struct EpsAtom {
    int i;
    friend bool operator==(const EpsAtom&, const EpsAtom&) = default;
  };
  struct PermAtom {
    Cycles cycles;
    friend bool operator==(const PermAtom&, const PermAtom&) = default;
  };
  struct SigAtom {  // lemma3_embed; cycles over 1..n+1
    Cycles cycles;
    friend bool operator==(const SigAtom&, const SigAtom&) = default;
  };
  struct SpecialAtom {
    Special which;
    friend bool operator==(const SpecialAtom&, const SpecialAtom&) = default;
  };
  struct Seq {
    std::vector<Ptr> factors;
  };
  struct Inverse {
    Ptr inner;
  };
  struct Power {
    Ptr base;
    long exponent;
  };
  struct Commutator {
    Ptr left, right;
  };
  struct Conj {
    Ptr conjugator, element;
    ConjOrientation orientation;
  };

  using Node = std::variant<LambdaAtom, RhoAtom, EpsAtom, PermAtom, SigAtom, SpecialAtom,
                            Seq, Inverse, Power, Commutator, Conj>;

  explicit GenExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

  static Ptr make(Node node) { return std::make_shared<GenExpr>(std::move(node)); }

 private:
  Node node_;
};

// Structural tree equality.
bool equal_trees(const GenExpr& a, const GenExpr& b);

// Evaluation at rank n, left argument first. Propagates constructor
// errors; negative powers of non-invertible endomorphisms throw
// NotAnAutomorphism.
Endo evaluate(const GenExpr& expr, int n);

// Renders into the CLI expression grammar; parse_expr(render(e)) yields an
// equal tree for conj-free expressions (Conj has no surface syntax and is
// rendered through its definition).
std::string render(const GenExpr& expr);

}  // namespace autfn
