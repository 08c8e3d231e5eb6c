#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "autfn/word.hpp"
#include "test_util.hpp"

using namespace autfn;

TEST_CASE("free reduction") {
  CHECK(Word::reduced({{1, +1}, {1, -1}}, 3).empty());
  Word w = Word::reduced({{2, +1}, {1, +1}, {1, -1}, {3, +1}}, 3);
  CHECK(w == Word::reduced({{2, +1}, {3, +1}}, 3));
  CHECK(w.length() == 2);

  // reduce(w . w^{-1}) is empty for any w
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Word v = testutil::random_word(rng, 4, 12);
    CHECK(concat(v, invert(v)).empty());
  }
}

TEST_CASE("reduction is idempotent") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Word v = testutil::random_word(rng, 3, 15);
    CHECK(Word::reduced(v.letters(), v.rank()) == v);
  }
}

TEST_CASE("reduce rejects bad letters") {
  CHECK_THROWS_AS(Word::reduced({{4, +1}}, 3), IndexOutOfRank);
  CHECK_THROWS_AS(Word::reduced({{0, +1}}, 3), IndexOutOfRank);
  CHECK_THROWS_AS(Word::reduced({{1, 2}}, 3), IndexOutOfRank);
}

TEST_CASE("concat") {
  Word u = Word::reduced({{2, +1}, {1, +1}}, 3);
  Word v = Word::reduced({{1, -1}, {3, +1}}, 3);
  CHECK(concat(u, v) == Word::reduced({{2, +1}, {3, +1}}, 3));
  CHECK(concat(u, Word(3)) == u);
  CHECK(concat(Word::generator(1, 3), Word::generator(2, 3)) ==
        Word::reduced({{1, +1}, {2, +1}}, 3));
  CHECK_THROWS_AS(concat(Word(3), Word(4)), RankMismatch);

  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Word a = testutil::random_word(rng, 3, 10);
    Word b = testutil::random_word(rng, 3, 10);
    CHECK(concat(a, b).length() <= a.length() + b.length());
  }
}

TEST_CASE("invert") {
  Word u = Word::reduced({{2, +1}, {1, +1}}, 3);
  CHECK(invert(u) == Word::reduced({{1, -1}, {2, -1}}, 3));
  CHECK(invert(Word(3)) == Word(3));
  CHECK(invert(Word::generator(1, 3, -1)) == Word::generator(1, 3));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Word v = testutil::random_word(rng, 4, 12);
    CHECK(invert(invert(v)) == v);
  }
}

TEST_CASE("exponent sums") {
  Word conj = Word::reduced({{2, +1}, {1, +1}, {2, -1}}, 3);
  CHECK(exponent_sums(conj) == std::vector<long long>{1, 0, 0});
  Word dbl = Word::reduced({{2, +1}, {1, +1}, {2, +1}}, 3);
  CHECK(exponent_sums(dbl) == std::vector<long long>{1, 2, 0});
  CHECK(exponent_sums(Word(3)) == std::vector<long long>{0, 0, 0});

  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    Word a = testutil::random_word(rng, 3, 10);
    Word b = testutil::random_word(rng, 3, 10);
    auto sum = exponent_sums(concat(a, b));
    auto ea = exponent_sums(a);
    auto eb = exponent_sums(b);
    for (std::size_t k = 0; k < sum.size(); ++k) CHECK(sum[k] == ea[k] + eb[k]);
  }
}

TEST_CASE("text syntax") {
  Word w = Word::parse("a2 a1'", 3);
  CHECK(w == Word::reduced({{2, +1}, {1, -1}}, 3));
  CHECK(w.str() == "a2 a1'");
  CHECK(Word::parse("1", 3).empty());
  CHECK(Word(3).str() == "1");
  CHECK(Word::parse("a1 a1'", 2).empty());
  CHECK_THROWS_AS(Word::parse("b1", 3), ParseError);
  CHECK_THROWS_AS(Word::parse("a9", 3), IndexOutOfRank);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Word v = testutil::random_word(rng, 4, 10);
    CHECK(Word::parse(v.str(), 4) == v);
  }
}

TEST_CASE("shortlex order") {
  CHECK(compare(Word(3), Word::generator(1, 3)) < 0);
  CHECK(compare(Word::generator(1, 3), Word::generator(1, 3, -1)) < 0);
  CHECK(compare(Word::generator(2, 3), Word::reduced({{1, +1}, {1, +1}}, 3)) < 0);
  CHECK(compare(Word::generator(1, 3), Word::generator(1, 3)) == 0);
}
