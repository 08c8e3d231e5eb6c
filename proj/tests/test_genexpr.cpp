#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "autfn/nielsen.hpp"
#include "autfn/parser.hpp"
#include "autfn/suite.hpp"

using namespace autfn;

namespace {

Endo eval_str(const std::string& text, int n) { return evaluate(*parse_expr(text, n), n); }

}  // namespace

TEST_CASE("commutator evaluation") {
  CHECK(eval_str("[l(1,2), l(2,3)]", 3) == lambda(1, 3, 3));
  CHECK(eval_str("[l(1,2), l(3,2)]", 3).is_identity());
  CHECK(eval_str("[l(1,2), l(2,3)]", 5) == lambda(1, 3, 5));
}

TEST_CASE("postfix operators") {
  CHECK(eval_str("l(1,2)^3 '", 3) == power(lambda(1, 2, 3), -3));
  CHECK(eval_str("l(1,2)^-2", 3) == power(lambda(1, 2, 3), -2));
  CHECK(eval_str("l(1,2)'", 3) == inverse(lambda(1, 2, 3)));
  CHECK(eval_str("l(1,2)^0", 3).is_identity());
}

TEST_CASE("juxtaposition binds looser than postfix") {
  CHECK(eval_str("l(1,2) l(2,3)^2", 3) ==
        compose(lambda(1, 2, 3), power(lambda(2, 3, 3), 2)));
  CHECK(eval_str("(l(1,2) l(2,3))^2", 3) ==
        power(compose(lambda(1, 2, 3), lambda(2, 3, 3)), 2));
}

TEST_CASE("atoms") {
  CHECK(eval_str("p(1 2)(3 4)", 4) ==
        perm_endo(Perm::from_cycles({{1, 2}, {3, 4}}, 4), 4));
  CHECK(eval_str("p()", 3).is_identity());
  CHECK(eval_str("sig(1 4)", 3) == lemma3_embed(Perm::from_cycles({{1, 4}}, 4), 3));
  CHECK(eval_str("iota", 3) == special(Special::Iota, 3));
  CHECK(eval_str("z", 4) == special(Special::Z, 4));
  CHECK(eval_str("alpha", 3) == special(Special::Alpha, 3));
  CHECK(eval_str("beta", 3) == special(Special::Beta, 3));
  CHECK(eval_str("theta", 4) == special(Special::Theta, 4));
  CHECK(eval_str("e(2)", 3) == eps(2, 3));
  CHECK(eval_str("r(2,1)", 3) == rho(2, 1, 3));
}

TEST_CASE("the z sandwich") {
  CHECK(eval_str("z l(1,2) z", 3) == rho(1, 2, 3));
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse_expr("l(1,1)", 3), SemanticError);
  CHECK_THROWS_AS(parse_expr("l(4,2)", 3), SemanticError);
  CHECK_THROWS_AS(parse_expr("e(0)", 3), SemanticError);
  CHECK_THROWS_AS(parse_expr("p(1 5)", 3), SemanticError);
  CHECK_THROWS_AS(parse_expr("sig(1 5)", 3), SemanticError);
  CHECK_THROWS_AS(evaluate(*parse_expr("alpha", 4), 4), UnsupportedRank);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_expr("q(1)", 3), ParseError);
  CHECK_THROWS_AS(parse_expr("[l(1,2) l(2,3)]", 3), ParseError);
  CHECK_THROWS_AS(parse_expr("l(1,", 3), ParseError);
  CHECK_THROWS_AS(parse_expr("", 3), ParseError);
  CHECK_THROWS_AS(parse_expr("l(1,2))", 3), ParseError);
  try {
    parse_expr("l(1,2) $", 3);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("negative powers of non-automorphisms fail") {
  // parse succeeds, evaluation of the inverse throws
  Endo collapse(3, {Word::generator(2, 3), Word::generator(2, 3), Word::generator(3, 3)});
  CHECK_THROWS_AS(power(collapse, -2), NotAnAutomorphism);
}

TEST_CASE("render round trip") {
  for (const std::string& text :
       {"l(1,2)", "r(2,3)", "e(1)", "p(1 2)(3 4)", "sig(1 4)", "iota", "z", "alpha",
        "beta", "theta", "l(1,2) l(2,3)", "[l(1,2), l(2,3)]", "l(1,2)^3",
        "l(1,2)^-2", "l(1,2)'", "(l(1,2) l(2,3))^2", "[l(1,2), l(2,3) e(1)]'",
        "z l(1,2) z", "p(1 2) (l(1,2) e(2))' theta^2"}) {
    GenExpr::Ptr parsed = parse_expr(text, 4);
    GenExpr::Ptr reparsed = parse_expr(render(*parsed), 4);
    CHECK(equal_trees(*parsed, *reparsed));
  }
}

TEST_CASE("render round trip on random trees") {
  std::mt19937 rng(67);
  std::uniform_int_distribution<int> shape(0, 9);
  std::uniform_int_distribution<int> idx(1, 3);
  std::uniform_int_distribution<long> expo(-3, 3);

  std::function<GenExpr::Ptr(int)> gen = [&](int depth) -> GenExpr::Ptr {
    int s = depth <= 0 ? shape(rng) % 4 : shape(rng);
    switch (s) {
      case 0: {
        int i = idx(rng), j = idx(rng);
        if (i == j) j = i % 3 + 1;
        return GenExpr::make(GenExpr::LambdaAtom{i, j});
      }
      case 1: {
        int i = idx(rng), j = idx(rng);
        if (i == j) j = i % 3 + 1;
        return GenExpr::make(GenExpr::RhoAtom{i, j});
      }
      case 2:
        return GenExpr::make(GenExpr::EpsAtom{idx(rng)});
      case 3:
        return GenExpr::make(GenExpr::SpecialAtom{Special::Z});
      case 4:
      case 5: {
        std::vector<GenExpr::Ptr> fs;
        int count = 2 + shape(rng) % 2;
        for (int k = 0; k < count; ++k) fs.push_back(gen(depth - 1));
        return GenExpr::make(GenExpr::Seq{std::move(fs)});
      }
      case 6:
        return GenExpr::make(GenExpr::Inverse{gen(depth - 1)});
      case 7:
        return GenExpr::make(GenExpr::Power{gen(depth - 1), expo(rng)});
      default:
        return GenExpr::make(GenExpr::Commutator{gen(depth - 1), gen(depth - 1)});
    }
  };

  for (int trial = 0; trial < 200; ++trial) {
    GenExpr::Ptr tree = gen(3);
    GenExpr::Ptr reparsed = parse_expr(render(*tree), 3);
    CHECK(equal_trees(*tree, *reparsed));
  }
}

TEST_CASE("conj nodes evaluate in both orientations") {
  GenExpr::Ptr g = GenExpr::make(GenExpr::PermAtom{{{1, 2, 3}}});
  GenExpr::Ptr x = GenExpr::make(GenExpr::EpsAtom{1});
  Endo ge = evaluate(*g, 3);
  Endo xe = evaluate(*x, 3);
  Endo left = evaluate(*GenExpr::make(GenExpr::Conj{g, x, ConjOrientation::Left}), 3);
  Endo right = evaluate(*GenExpr::make(GenExpr::Conj{g, x, ConjOrientation::Right}), 3);
  CHECK(left == compose(compose(ge, xe), inverse(ge)));
  CHECK(right == compose(compose(inverse(ge), xe), ge));
  CHECK_FALSE(left == right);
}
