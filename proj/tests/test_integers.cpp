#include <gmpxx.h>

#include "doctest.h"
#include "ecq/integers.hpp"

using namespace ecq;

TEST_CASE("valuations with infinity sentinel") {
  CHECK(padic_valuation_of_integer(150, 5) == Valuation(2));
  CHECK(padic_valuation_of_integer(0, 7).is_infinite());
  CHECK(padic_valuation_of_integer(-11, 11) == Valuation(1));
  CHECK(Valuation::min(Valuation(1), Valuation::infinity()) == Valuation(1));
  CHECK(Valuation(3) + Valuation::infinity() == Valuation::infinity());
  CHECK(Valuation(2) < Valuation::infinity());
}

TEST_CASE("kronecker symbol agrees with gmp and with brute force") {
  // brute force: for odd prime n, (a|n) = 1 iff a is a nonzero square mod n
  auto brute = [](long a, long n) -> int {
    long r = ((a % n) + n) % n;
    if (r == 0) return 0;
    for (long x = 1; x < n; ++x)
      if ((x * x) % n == r) return 1;
    return -1;
  };
  for (long n : {3L, 5L, 7L, 11L, 13L, 97L}) {
    for (long a = -30; a <= 30; ++a) {
      CHECK(kronecker_symbol(a, n) == brute(a, n));
    }
  }
  for (long a = -40; a <= 40; ++a)
    for (long n = -40; n <= 40; ++n)
      CHECK(kronecker_symbol(a, n) == mpz_kronecker(Int(a).get_mpz_t(), Int(n).get_mpz_t()));
}

TEST_CASE("factorization is exact and sorted") {
  auto f = factorize(Int(-496));
  REQUIRE(f.size() == 2);
  CHECK(f[0].prime == 2);
  CHECK(f[0].exponent == 4);
  CHECK(f[1].prime == 31);
  CHECK(f[1].exponent == 1);

  // semiprime beyond the trial division bound exercises the rho path
  Int a = 1000003, b = 1000033;
  auto g = factorize(a * b);
  REQUIRE(g.size() == 2);
  CHECK(g[0].prime == a);
  CHECK(g[1].prime == b);

  CHECK(is_squarefree(Int(30)));
  CHECK_FALSE(is_squarefree(Int(12)));
}

TEST_CASE("primality and prime listing") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(1000003)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(-7)));
  auto ps = primes_up_to(20);
  CHECK(ps == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19});
}
