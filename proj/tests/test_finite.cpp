#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "autfn/finite.hpp"
#include "autfn/generators.hpp"

using namespace autfn;

namespace {

std::vector<Endo> wn_gens(int n) {
  std::vector<Endo> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(eps(i, n));
  for (int i = 1; i < n; ++i) {
    gens.push_back(perm_endo(Perm::from_cycles({{i, i + 1}}, n), n));
  }
  return gens;
}

std::vector<Endo> shadow_gens(int n) {
  std::vector<Endo> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i != j) gens.push_back(lambda(i, j, n));
    }
  gens.push_back(special(Special::Iota, n));
  return gens;
}

}  // namespace

TEST_CASE("closure basics") {
  EndoSet empty = closure({}, 3);
  CHECK(empty.size() == 1);
  CHECK(empty.elements[0].is_identity());

  CHECK_THROWS_AS(closure({lambda(1, 2, 3)}, 3, 50), ClosureCapExceeded);
  CHECK_THROWS_AS(closure({eps(1, 4)}, 3), RankMismatch);

  CHECK(closure(wn_gens(3), 3, 1000).size() == 48);
}

TEST_CASE("W_n sizes") {
  EndoSet w3 = build_Wn(3);
  CHECK(w3.size() == 48);  // 2^3 * 3!
  EndoSet w4 = build_Wn(4);
  CHECK(w4.size() == 384);  // 2^4 * 4!

  // Lagrange: element orders divide |W_3|
  for (const Endo& e : w3.elements) CHECK(48 % order_with_cap(e, 48) == 0);

  // z is central
  Endo zed = special(Special::Z, 3);
  CHECK(w3.contains(zed));
  for (const Endo& e : w3.elements) CHECK(compose(zed, e) == compose(e, zed));
}

TEST_CASE("Sigma sizes and closure") {
  EndoSet s3 = build_Sigma(3);
  CHECK(s3.size() == 24);  // 4!
  CHECK(build_Sigma(4).size() == 120);

  for (const Endo& a : s3.elements)
    for (const Endo& b : s3.elements) CHECK(s3.contains(compose(a, b)));
}

TEST_CASE("Sigma meets W_n in the visible S_n") {
  EndoSet s3 = build_Sigma(3);
  EndoSet w3 = build_Wn(3);
  std::vector<Endo> meet;
  for (const Endo& e : s3.elements) {
    if (w3.contains(e)) meet.push_back(e);
  }
  CHECK(meet.size() == 6);
  std::set<Endo> perms;
  for (const Perm& p : Perm::all(3)) perms.insert(perm_endo(p, 3));
  for (const Endo& e : meet) CHECK(perms.count(e) == 1);
}

TEST_CASE("invariant subgroups at n = 3, 4, 5") {
  for (int n : {3, 4, 5}) {
    auto subs = sn_invariant_subgroups(n);
    REQUIRE(subs.size() == 4);
    std::multiset<Vec2Label> labels;
    for (const auto& s : subs) labels.insert(s.label);
    CHECK(labels == std::multiset<Vec2Label>{Vec2Label::Trivial, Vec2Label::Diag,
                                             Vec2Label::EvenWeight, Vec2Label::Full});
    // z (the all-ones vector) lies in H = even weight exactly when n is even
    std::uint32_t ones = (1u << n) - 1;
    for (const auto& s : subs) {
      if (s.label == Vec2Label::EvenWeight) {
        CHECK(s.contains(ones) == (n % 2 == 0));
      }
    }
  }
}

TEST_CASE("invariant subgroups at n = 2 degenerate") {
  // diag and even-weight coincide at n = 2, so only three subgroups exist
  auto subs = sn_invariant_subgroups(2);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].label == Vec2Label::Trivial);
  CHECK(subs[1].label == Vec2Label::Diag);
  CHECK(subs[1].elements == std::vector<std::uint32_t>{0, 3});
  CHECK(subs[2].label == Vec2Label::Full);
}

TEST_CASE("invariant subgroups against direct closedness oracle") {
  // independent route: a subgroup invariant under all coordinate
  // permutations is a union of weight classes; test each union for
  // closedness under xor directly instead of spanning
  for (int n : {3, 4, 5}) {
    std::set<std::vector<std::uint32_t>> expected;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::uint32_t> vecs{0};
      for (std::uint32_t v = 1; v < (1u << n); ++v) {
        if (mask & (1u << (std::popcount(v) - 1))) vecs.push_back(v);
      }
      bool closed = true;
      for (std::uint32_t a : vecs)
        for (std::uint32_t b : vecs) {
          closed &= std::binary_search(vecs.begin(), vecs.end(), a ^ b);
        }
      if (closed) expected.insert(vecs);
    }
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& s : sn_invariant_subgroups(n)) got.insert(s.elements);
    CHECK(got == expected);
  }
}

TEST_CASE("invariant subgroups rank guard") {
  CHECK_THROWS_AS(sn_invariant_subgroups(13), RankTooLarge);
  CHECK_THROWS_AS(sn_invariant_subgroups(0), RankTooLarge);
}

TEST_CASE("mod-2 shadow is GL(3,2)") {
  ModMatrixSet shadow = gl2_shadow(3, shadow_gens(3));
  CHECK(shadow.size() == 168);

  // defining relations of the exponent-2 quotient hold in the shadow
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      CHECK(mod_reduce(abelianize(power(lambda(i, j, 3), 2)), 2).is_identity());
    }
  for (int i = 1; i <= 3; ++i) {
    CHECK(mod_reduce(abelianize(eps(i, 3)), 2).is_identity());
  }
}

TEST_CASE("normal closures") {
  EndoSet w3 = build_Wn(3);
  Endo zed = special(Special::Z, 3);
  EndoSet center = normal_closure_in_finite(w3, zed);
  CHECK(center.size() == 2);
  CHECK(center.contains(zed));
  CHECK(center.contains(Endo::identity(3)));

  EndoSet triv = normal_closure_in_finite(w3, Endo::identity(3));
  CHECK(triv.size() == 1);

  ModMatrixSet shadow = gl2_shadow(3, shadow_gens(3));
  ModMatrix iota2 = mod_reduce(abelianize(special(Special::Iota, 3)), 2);
  CHECK(normal_closure_in_finite(shadow, iota2).size() == 168);

  CHECK_THROWS_AS(normal_closure_in_finite(w3, lambda(1, 2, 3)), ElementNotInGroup);
}
