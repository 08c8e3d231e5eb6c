#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "autfn/generators.hpp"
#include "autfn/nielsen.hpp"
#include "test_util.hpp"

using namespace autfn;

TEST_CASE("lambda") {
  Endo l = lambda(1, 2, 3);
  CHECK(l.image(1) == Word::reduced({{2, +1}, {1, +1}}, 3));
  CHECK(l.image(2) == Word::generator(2, 3));
  CHECK(l.image(3) == Word::generator(3, 3));
  CHECK(lambda(3, 1, 3).image(3) == Word::reduced({{1, +1}, {3, +1}}, 3));
  CHECK_THROWS_AS(lambda(1, 1, 3), BadIndices);
  CHECK_THROWS_AS(lambda(0, 2, 3), BadIndices);
  CHECK_THROWS_AS(lambda(1, 4, 3), BadIndices);
}

TEST_CASE("rho") {
  CHECK(rho(1, 2, 3).image(1) == Word::reduced({{1, +1}, {2, +1}}, 3));
  CHECK_FALSE(equals(rho(1, 2, 3), lambda(1, 2, 3)));
  CHECK(abelianize(rho(1, 2, 3)) == abelianize(lambda(1, 2, 3)));
}

TEST_CASE("eps") {
  CHECK(eps(1, 3).image(1) == Word::generator(1, 3, -1));
  CHECK(order_with_cap(eps(2, 3), 5) == 2);
  CHECK(compose(eps(1, 3), eps(2, 3)) == compose(eps(2, 3), eps(1, 3)));
  CHECK_THROWS_AS(eps(4, 3), BadIndices);
}

TEST_CASE("perm_endo") {
  Endo swap12 = perm_endo(Perm::from_cycles({{1, 2}}, 3), 3);
  CHECK(swap12.image(1) == Word::generator(2, 3));
  CHECK(swap12.image(2) == Word::generator(1, 3));
  CHECK(swap12.image(3) == Word::generator(3, 3));
  CHECK(perm_endo(Perm(4), 4).is_identity());
  CHECK(order_with_cap(perm_endo(Perm::from_cycles({{1, 2, 3}}, 3), 3), 10) == 3);
  CHECK_THROWS_AS(perm_endo(Perm(3), 4), RankMismatch);
}

TEST_CASE("perm composition matches endo composition") {
  // injective, and perm_endo(p.then(q)) == compose(perm_endo(p), perm_endo(q))
  std::vector<Perm> s3 = Perm::all(3);
  for (const Perm& p : s3)
    for (const Perm& q : s3) {
      CHECK(perm_endo(p.then(q), 3) == compose(perm_endo(p, 3), perm_endo(q, 3)));
    }
  for (std::size_t a = 0; a < s3.size(); ++a)
    for (std::size_t b = a + 1; b < s3.size(); ++b) {
      CHECK_FALSE(perm_endo(s3[a], 3) == perm_endo(s3[b], 3));
    }
}

TEST_CASE("specials") {
  Endo zed = special(Special::Z, 3);
  Endo chain = compose(compose(eps(1, 3), eps(2, 3)), eps(3, 3));
  CHECK(zed == chain);
  for (int i = 1; i <= 3; ++i) CHECK(zed.image(i) == Word::generator(i, 3, -1));

  CHECK(order_with_cap(special(Special::Alpha, 3), 10) == 2);
  CHECK(order_with_cap(special(Special::Beta, 3), 10) == 2);

  Endo th = special(Special::Theta, 4);
  CHECK(th.image(1) == Word::generator(1, 4));
  CHECK(th.image(2) == Word::generator(2, 4));
  CHECK(th.image(3) == Word::reduced({{2, +1}, {3, +1}}, 4));
  CHECK(th.image(4) == Word::reduced({{2, +1}, {4, +1}}, 4));

  CHECK(special(Special::Iota, 3) == perm_endo(Perm::from_cycles({{1, 2}}, 3), 3));

  CHECK_THROWS_AS(special(Special::Alpha, 4), UnsupportedRank);
  CHECK_THROWS_AS(special(Special::Beta, 2), UnsupportedRank);
  CHECK_THROWS_AS(special(Special::Theta, 2), UnsupportedRank);
}

TEST_CASE("lemma3_embed formula") {
  // tau fixing n+1 restricts to a plain basis permutation
  Perm tau = Perm::from_cycles({{1, 2, 3}}, 4);
  CHECK(lemma3_embed(tau, 3) == perm_endo(Perm::from_cycles({{1, 2, 3}}, 3), 3));

  // tau = (1, n+1) at n = 3
  Endo e = lemma3_embed(Perm::from_cycles({{1, 4}}, 4), 3);
  CHECK(e.image(1) == Word::generator(1, 3, -1));
  CHECK(e.image(2) == Word::reduced({{2, +1}, {1, -1}}, 3));
  CHECK(e.image(3) == Word::reduced({{3, +1}, {1, -1}}, 3));
  CHECK(order_with_cap(e, 10) == 2);

  CHECK_THROWS_AS(lemma3_embed(Perm(3), 3), RankMismatch);
}

TEST_CASE("lemma3_embed is an injective homomorphism") {
  std::vector<Perm> s4 = Perm::all(4);
  std::vector<Endo> images;
  for (const Perm& tau : s4) images.push_back(lemma3_embed(tau, 3));

  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b) {
      CHECK_FALSE(images[a] == images[b]);
    }

  // direct orientation holds ...
  for (const Perm& p : s4)
    for (const Perm& q : s4) {
      CHECK(lemma3_embed(p.then(q), 3) == compose(lemma3_embed(p, 3), lemma3_embed(q, 3)));
    }
  // ... and the inverse orientation fails somewhere (S_4 is not abelian)
  bool anti_fails = false;
  for (const Perm& p : s4) {
    for (const Perm& q : s4) {
      if (!(lemma3_embed(p.then(q).inverse(), 3) ==
            compose(lemma3_embed(p.inverse(), 3), lemma3_embed(q.inverse(), 3)))) {
        anti_fails = true;
      }
    }
  }
  CHECK(anti_fails);
}

TEST_CASE("lemma3_embed lands in W_n exactly when tau fixes n+1") {
  for (const Perm& tau : Perm::all(4)) {
    bool single_letters = true;
    Endo e = lemma3_embed(tau, 3);
    for (int i = 1; i <= 3; ++i) single_letters &= e.image(i).length() == 1;
    CHECK(single_letters == (tau.image_of(4) == 4));
  }
}

TEST_CASE("alpha and beta sit inside the Lemma 3 subgroup") {
  CHECK(special(Special::Alpha, 3) == lemma3_embed(Perm::from_cycles({{1, 4}, {2, 3}}, 4), 3));
  CHECK(special(Special::Beta, 3) == lemma3_embed(Perm::from_cycles({{1, 3}, {2, 4}}, 4), 3));
}

TEST_CASE("every constructor output is an automorphism") {
  for (const Endo& g : testutil::elementary_pool(4)) CHECK(is_automorphism(g));
  CHECK(is_automorphism(special(Special::Alpha, 3)));
  CHECK(is_automorphism(special(Special::Beta, 3)));
  CHECK(is_automorphism(special(Special::Theta, 5)));
  CHECK(is_automorphism(special(Special::Z, 4)));
  for (const Perm& tau : Perm::all(4)) CHECK(is_automorphism(lemma3_embed(tau, 3)));
}
