#include <random>

#include "doctest.h"
#include "ecq/padic.hpp"

using namespace ecq;

namespace {

// Independent partial-sum oracle for log(1 + p*m) mod p^N: evaluates
// sum (-1)^(k+1) z^k / k with exact rational bookkeeping, no PadicNumber.
Int log_series_oracle(long p, const Int& z, long N, long terms) {
  Int mod = power(Int(p), static_cast<unsigned long>(N));
  Int acc = 0;
  for (long k = 1; k <= terms; ++k) {
    Int num = power(z, static_cast<unsigned long>(k));
    Int den = k;
    long e = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
      den /= p;
      ++e;
    }
    Int q = power(Int(p), static_cast<unsigned long>(e));
    REQUIRE(mpz_divisible_p(num.get_mpz_t(), q.get_mpz_t()));
    num /= q;
    Int term = mod_reduce(mod_reduce(num, mod) * mod_inverse(mod_reduce(den, mod), mod), mod);
    acc = mod_reduce(k % 2 == 1 ? Int(acc + term) : Int(acc - term), mod);
  }
  return acc;
}

}  // namespace

TEST_CASE("rational digit expansions") {
  auto x = PadicNumber::from_rational(1, 2, 5, 4);
  CHECK(x.valuation() == Valuation(0));
  CHECK(x.unit_part() == 313);  // 2 * 313 = 626 = 1 mod 625

  auto z = PadicNumber::from_rational(0, 1, 5, 4);
  CHECK(z.is_zero());
  CHECK(z.valuation().is_infinite());

  auto y = PadicNumber::from_rational(50, 1, 5, 4);
  CHECK(y.valuation() == Valuation(2));
  CHECK(y.unit_digits().size() == 2);
  CHECK(y.unit_digits()[0] == 2);

  CHECK_THROWS_AS(PadicNumber::from_rational(1, 0, 5, 4), Error);
  CHECK_THROWS_AS(PadicNumber::from_rational(1, 2, 6, 4), Error);
}

TEST_CASE("canonical form invariants") {
  for (long num = -20; num <= 20; ++num) {
    if (num == 0) continue;
    for (long den : {1L, 2L, 3L, 7L, 25L}) {
      auto x = PadicNumber::from_rational(num, den, 5, 8);
      if (x.is_zero()) continue;
      CHECK(x.unit_digits().front() != 0);
      for (auto d : x.unit_digits()) CHECK(d < 5);
      CHECK(x.valuation().value() < x.abs_precision());
      CHECK(static_cast<long>(x.unit_digits().size()) == x.relative_precision());
    }
  }
}

TEST_CASE("arithmetic round trips against exact rationals") {
  // (a/b) * (b/a) = 1, (a/b) + (-a/b) = 0, at full precision
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    long a = static_cast<long>(rng() % 2000) + 1;
    long b = static_cast<long>(rng() % 2000) + 1;
    auto x = PadicNumber::from_rational(a, b, 7, 12);
    auto inv = PadicNumber::from_rational(b, a, 7, 12);
    auto one = x * inv;
    CHECK(one.agrees_with(PadicNumber::from_integer(1, 7, 12)));
    CHECK((x - x).is_zero());
    auto sum = x + PadicNumber::from_rational(-a, b, 7, 12);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("log: fixed values from the independent series oracle") {
  // log_5(6) mod 5^4 = 555
  auto l6 = padic_log_iwasawa(PadicNumber::from_integer(6, 5, 4));
  CHECK(l6.valuation() == Valuation(1));
  CHECK(l6.lift() == 555);
  CHECK(l6.lift() == log_series_oracle(5, 5, 4, 12));

  // log of p vanishes on the Iwasawa branch
  auto lp = padic_log_iwasawa(PadicNumber::from_integer(5, 5, 4));
  CHECK(lp.is_zero());

  // log of 1
  auto l1 = padic_log_iwasawa(PadicNumber::from_integer(1, 5, 4));
  CHECK(l1.is_zero());

  CHECK_THROWS_AS(padic_log_iwasawa(PadicNumber::zero(5, 4)), Error);
}

TEST_CASE("log kills every Teichmueller lift") {
  for (long p : {5L, 7L, 11L}) {
    for (long a = 1; a < p; ++a) {
      auto w = teichmuller_lift(a, p, 12);
      // fixed point of x -> x^p
      Int mod = power(Int(p), 12);
      Int wp;
      mpz_powm_ui(wp.get_mpz_t(), w.lift().get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());
      CHECK(wp == w.lift());
      CHECK(padic_log_iwasawa(w).is_zero());
    }
  }
}

TEST_CASE("log homomorphism on random units") {
  std::mt19937_64 rng(20260810);
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 40; ++i) {
      long a = static_cast<long>(rng() % 100000) + 1;
      long b = static_cast<long>(rng() % 100000) + 1;
      if (a % p == 0) ++a;
      if (b % p == 0) ++b;
      auto x = PadicNumber::from_integer(a, p, 20);
      auto y = PadicNumber::from_integer(b, p, 20);
      auto lhs = padic_log_iwasawa(x * y);
      auto rhs = padic_log_iwasawa(x) + padic_log_iwasawa(y);
      CHECK(lhs.agrees_with(rhs));
    }
  }
}

TEST_CASE("leading-term valuation of log on principal units") {
  // x in 1 + pZ_p with x != 1 mod p^2  =>  ord(log x) = 1
  for (long p : {5L, 7L, 11L}) {
    for (long m = 1; m < p; ++m) {
      auto x = PadicNumber::from_integer(1 + p * m, p, 15);
      auto lx = padic_log_iwasawa(x);
      CHECK(lx.valuation() == Valuation(1));
    }
  }
}

TEST_CASE("precision soundness: higher precision refines, never contradicts") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    long a = static_cast<long>(rng() % 5000) + 2;
    long b = static_cast<long>(rng() % 5000) + 1;
    auto lo = PadicNumber::from_rational(a, b, 5, 6);
    auto hi = PadicNumber::from_rational(a, b, 5, 14);
    CHECK(hi.truncated(6) == lo);
    if (!lo.is_zero() && a % 5 != 0) {
      auto llo = padic_log_iwasawa(lo);
      auto lhi = padic_log_iwasawa(hi);
      CHECK(lhi.agrees_with(llo));
    }
  }
}

TEST_CASE("integer scaling keeps relative precision") {
  auto x = PadicNumber::from_integer(6, 5, 10);
  auto y = x.div_integer(5);
  CHECK(y.valuation() == Valuation(-1));
  CHECK(y.relative_precision() == x.relative_precision());
  auto z = y.mul_integer(5);
  CHECK(z.agrees_with(x));
  auto w = x.div_integer(3);
  CHECK(w.mul_integer(3).agrees_with(x));
}
