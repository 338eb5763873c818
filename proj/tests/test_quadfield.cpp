#include "doctest.h"
#include "ecq/quadfield.hpp"

using namespace ecq;

TEST_CASE("fundamental discriminant validation") {
  CHECK_NOTHROW(QuadraticField(Int(3)));    // -3
  CHECK_NOTHROW(QuadraticField(Int(4)));    // -4
  CHECK_NOTHROW(QuadraticField(Int(7)));
  CHECK_NOTHROW(QuadraticField(Int(8)));
  CHECK_NOTHROW(QuadraticField(Int(11)));
  CHECK_NOTHROW(QuadraticField(Int(24)));
  CHECK_THROWS_AS(QuadraticField(Int(5)), Error);    // -5 = 3 mod 4
  CHECK_THROWS_AS(QuadraticField(Int(9)), Error);    // not squarefree
  CHECK_THROWS_AS(QuadraticField(Int(12)), Error);   // -12/4 = -3 = 1 mod 4
  CHECK_THROWS_AS(QuadraticField(Int(16)), Error);
  CHECK_THROWS_AS(QuadraticField(Int(-11)), Error);  // D itself must be positive
}

TEST_CASE("splitting types") {
  QuadraticField K11(Int(11));
  CHECK(splitting_type(Int(5), K11) == SplittingType::Split);   // -11 = 4 mod 5
  QuadraticField K4(Int(4));
  CHECK(splitting_type(Int(3), K4) == SplittingType::Inert);    // -4 = 2 mod 3
  QuadraticField K7(Int(7));
  CHECK(splitting_type(Int(7), K7) == SplittingType::Ramified);
  CHECK(splitting_type(Int(2), K7) == SplittingType::Split);    // -7 = 1 mod 8
  QuadraticField K3(Int(3));
  CHECK(splitting_type(Int(2), K3) == SplittingType::Inert);    // -3 = 5 mod 8
  CHECK(splitting_type(Int(2), K4) == SplittingType::Ramified);
}

TEST_CASE("splitting agrees with brute-force quadratic residues") {
  for (long D : {3L, 4L, 7L, 8L, 11L, 19L, 20L, 24L, 43L}) {
    QuadraticField K((Int(D)));
    for (long ell : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
      if (D % ell == 0) {
        CHECK(splitting_type(Int(ell), K) == SplittingType::Ramified);
        continue;
      }
      long r = (((-D) % ell) + ell) % ell;
      bool is_square = false;
      for (long x = 0; x < ell; ++x)
        if ((x * x) % ell == r) is_square = true;
      auto expected = is_square ? SplittingType::Split : SplittingType::Inert;
      CHECK(splitting_type(Int(ell), K) == expected);
    }
  }
}

TEST_CASE("permissible factorizations") {
  QuadraticField K11(Int(11));
  auto f = permissible_factorization(Int(15), K11);
  REQUIRE(f.has_value());
  CHECK(f->n_plus == 15);  // 3 and 5 both split for -11
  CHECK(f->n_minus == 1);
  CHECK(f->nu_minus == 0);

  QuadraticField K4(Int(4));
  auto g = permissible_factorization(Int(21), K4);
  REQUIRE(g.has_value());
  CHECK(g->n_plus == 1);  // 3 and 7 inert for -4
  CHECK(g->n_minus == 21);
  CHECK(g->nu_minus == 2);

  // inert prime squared: no permissible factorization
  auto h = permissible_factorization(Int(9 * 7), K4);
  CHECK_FALSE(h.has_value());

  CHECK_THROWS_AS(permissible_factorization(Int(22), K11), Error);  // gcd(D, N) != 1
}

TEST_CASE("factorization uniqueness and multiplicativity") {
  QuadraticField K(Int(11));
  // coprime pieces multiply componentwise
  Int n1(15), n2(23 * 13);  // 23: -11 = 12 mod 23 -> QR? checked via library itself
  auto f1 = permissible_factorization(n1, K);
  auto f2 = permissible_factorization(n2, K);
  auto f12 = permissible_factorization(n1 * n2, K);
  if (f1 && f2) {
    REQUIRE(f12.has_value());
    CHECK(f12->n_plus == f1->n_plus * f2->n_plus);
    CHECK(f12->n_minus == f1->n_minus * f2->n_minus);
    CHECK(f12->nu_minus == f1->nu_minus + f2->nu_minus);
  }
}
