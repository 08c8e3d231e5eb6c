#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "autfn/endo.hpp"
#include "autfn/generators.hpp"
#include "autfn/matrix.hpp"

using namespace autfn;

TEST_CASE("elementary matrices") {
  IntMatrix m = IntMatrix::elementary(2, 1, 2, 3);
  CHECK(m(1, 0) == 2);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 0);
  CHECK_THROWS_AS(IntMatrix::elementary(1, 1, 1, 3), BadIndices);

  CHECK(mul(IntMatrix::elementary(1, 2, 1, 3), IntMatrix::elementary(1, 2, 1, 3)) ==
        IntMatrix::elementary(1, 2, 2, 3));
}

TEST_CASE("mul") {
  IntMatrix a = IntMatrix::elementary(1, 3, 5, 3);
  CHECK(mul(a, IntMatrix::identity(3)) == a);
  CHECK(mul(IntMatrix::identity(3), a) == a);
  CHECK_THROWS_AS(mul(IntMatrix::identity(2), IntMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("determinant") {
  CHECK(det(IntMatrix::identity(4)) == 1);
  CHECK(det(IntMatrix::elementary(1, 2, 7, 3)) == 1);

  IntMatrix d = IntMatrix::identity(3);
  d(0, 0) = -1;
  CHECK(det(d) == -1);

  IntMatrix m(3);
  long long vals[3][3] = {{2, 3, 1}, {4, 7, 7}, {2, 5, 13}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = vals[r][c];
  CHECK(det(m) == 4);

  IntMatrix sing(2);
  sing(0, 0) = 1;
  sing(0, 1) = 2;
  sing(1, 0) = 2;
  sing(1, 1) = 4;
  CHECK(det(sing) == 0);

  // zero pivot forcing a row swap
  IntMatrix swapped(2);
  swapped(0, 1) = 1;
  swapped(1, 0) = 1;
  CHECK(det(swapped) == -1);
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> idx(1, 3);
  std::uniform_int_distribution<long long> coef(-2, 2);
  auto random_unimodular = [&] {
    IntMatrix m = IntMatrix::identity(3);
    for (int k = 0; k < 6; ++k) {
      int i = idx(rng), j = idx(rng);
      if (i == j) continue;
      m = mul(m, IntMatrix::elementary(i, j, coef(rng), 3));
    }
    return m;
  };
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_unimodular();
    IntMatrix b = random_unimodular();
    CHECK(det(a) == 1);
    CHECK(det(mul(a, b)) == det(a) * det(b));
  }
}

TEST_CASE("det_sign_map") {
  CHECK(det_sign_map(special(Special::Iota, 3)) == -1);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i != j) CHECK(det_sign_map(lambda(i, j, 3)) == 1);
    }
  CHECK(det_sign_map(special(Special::Z, 3)) == -1);  // (-1)^3
  CHECK(det_sign_map(special(Special::Z, 4)) == 1);   // (-1)^4

  Endo squared(3, {Word::reduced({{1, +1}, {1, +1}}, 3), Word::generator(2, 3),
                   Word::generator(3, 3)});
  CHECK_THROWS_AS(det_sign_map(squared), NotUnimodular);
}

TEST_CASE("matrix order") {
  CHECK(matrix_order_with_cap(IntMatrix::identity(3), 10) == 1);
  CHECK(matrix_order_with_cap(abelianize(perm_endo(Perm::from_cycles({{1, 2, 3}}, 3), 3)),
                              10) == 3);
  CHECK_THROWS_AS(matrix_order_with_cap(IntMatrix::elementary(2, 1, 2, 3), 100),
                  OrderCapExceeded);
}

TEST_CASE("mod reduction") {
  CHECK(mod_reduce(abelianize(power(lambda(1, 2, 3), 2)), 2).is_identity());
  CHECK(mod_reduce(IntMatrix::identity(3), 5).is_identity());
  CHECK(mod_reduce(abelianize(eps(1, 3)), 2).is_identity());  // -1 = 1 mod 2

  IntMatrix m = IntMatrix::identity(2);
  m(0, 1) = -3;
  ModMatrix r = mod_reduce(m, 5);
  CHECK(r(0, 1) == 2);

  ModMatrix a = mod_reduce(abelianize(lambda(1, 2, 3)), 2);
  CHECK(mod_mul(a, a).is_identity());
  CHECK_THROWS_AS(mod_reduce(m, 1), DimensionMismatch);
}

TEST_CASE("overflow raises, never wraps") {
  IntMatrix big = IntMatrix::elementary(1, 2, 1LL << 62, 3);
  CHECK_THROWS_AS(mul(big, big), Overflow);
}

TEST_CASE("generator abelianizations stay invertible mod m") {
  std::vector<Endo> gens;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      gens.push_back(lambda(i, j, 4));
      gens.push_back(rho(i, j, 4));
    }
  for (int i = 1; i <= 4; ++i) gens.push_back(eps(i, 4));
  for (unsigned m : {2u, 3u, 4u, 6u, 7u}) {
    for (const Endo& g : gens) {
      long long d = det(abelianize(g));
      long long dm = ((d % m) + m) % m;
      CHECK(std::gcd(static_cast<long long>(m), dm) == 1);
      // sanity: reduction commutes with multiplication
      CHECK(mod_mul(mod_reduce(abelianize(g), m), mod_reduce(abelianize(g), m)) ==
            mod_reduce(mul(abelianize(g), abelianize(g)), m));
    }
  }
}
