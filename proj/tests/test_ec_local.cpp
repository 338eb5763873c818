#include <random>

#include "doctest.h"
#include "ecq/tate.hpp"

using namespace ecq;

namespace {
WeierstrassCurve curve(long a1, long a2, long a3, long a4, long a6) {
  return WeierstrassCurve(Int(a1), Int(a2), Int(a3), Int(a4), Int(a6));
}
}  // namespace

TEST_CASE("derived quantities and invariant relations") {
  auto E = curve(0, 1, 0, -1, 0);
  CHECK(E.disc == 80);
  CHECK(E.c4 == 64);
  CHECK(4 * E.b8 == E.b2 * E.b6 - E.b4 * E.b4);
  CHECK(1728 * E.disc == E.c4 * E.c4 * E.c4 - E.c6 * E.c6);
  CHECK_THROWS_AS(curve(0, 0, 0, 0, 0), Error);
}

TEST_CASE("good reduction at primes away from the discriminant") {
  auto E = curve(0, 0, 0, 1, 1);  // disc = -496 = -2^4 * 31
  CHECK(E.disc == -496);
  auto d = tate_algorithm(E, 3);
  CHECK(d.reduction_class == ReductionClass::Good);
  CHECK(d.kodaira == KodairaType{KodairaType::Family::I, 0});
  CHECK(d.tamagawa == 1);
  CHECK(d.conductor_exponent == 0);
}

TEST_CASE("multiplicative reduction: split test by tangent directions") {
  auto E = curve(0, 1, 0, -1, 0);  // disc = 80
  auto d5 = tate_algorithm(E, 5);
  CHECK(d5.kodaira == KodairaType{KodairaType::Family::I, 1});
  CHECK(d5.reduction_class == ReductionClass::NonsplitMultiplicative);
  CHECK(d5.tamagawa == 1);
  CHECK(d5.conductor_exponent == 1);
  CHECK(d5.ord_delta_min == 1);

  auto d2 = tate_algorithm(E, 2);
  CHECK(d2.reduction_class == ReductionClass::Additive);

  // X_0(11): I5 split at 11, Tamagawa 5
  auto E11 = curve(0, -1, 1, -10, -20);
  CHECK(E11.disc == -161051);
  auto d11 = tate_algorithm(E11, 11);
  CHECK(d11.kodaira == KodairaType{KodairaType::Family::I, 5});
  CHECK(d11.reduction_class == ReductionClass::SplitMultiplicative);
  CHECK(d11.tamagawa == 5);

  // conductor 14: nonsplit I6 at 2, split I3 at 7
  auto E14 = curve(1, 0, 1, 4, -6);
  auto g = conductor_and_global_data(E14);
  CHECK(g.conductor == 14);
  CHECK(g.local.at(2).kodaira == KodairaType{KodairaType::Family::I, 6});
  CHECK(g.local.at(2).reduction_class == ReductionClass::NonsplitMultiplicative);
  CHECK(g.local.at(2).tamagawa == 2);
  CHECK(g.local.at(7).kodaira == KodairaType{KodairaType::Family::I, 3});
  CHECK(g.local.at(7).reduction_class == ReductionClass::SplitMultiplicative);
  CHECK(g.local.at(7).tamagawa == 3);
}

TEST_CASE("split criterion agrees with the -c6 residue shortcut for ell >= 5") {
  std::mt19937_64 rng(4242);
  int seen = 0;
  while (seen < 200) {
    long a1 = static_cast<long>(rng() % 5), a2 = static_cast<long>(rng() % 9) - 4,
         a3 = static_cast<long>(rng() % 5), a4 = static_cast<long>(rng() % 9) - 4,
         a6 = static_cast<long>(rng() % 9) - 4;
    Int ell = (rng() % 2 == 0) ? 5 : 7;
    WeierstrassCurve E = [&]() -> WeierstrassCurve {
      try {
        return curve(a1, a2, a3, a4, a6);
      } catch (const Error&) {
        return curve(0, 0, 0, -1, 1);
      }
    }();
    auto d = tate_algorithm(E, ell);
    if (d.reduction_class != ReductionClass::SplitMultiplicative &&
        d.reduction_class != ReductionClass::NonsplitMultiplicative)
      continue;
    ++seen;
    bool split_by_c6 = kronecker_symbol(-E.c6, ell) == 1;
    CHECK((d.reduction_class == ReductionClass::SplitMultiplicative) == split_by_c6);
  }
}

TEST_CASE("additive types traced by hand") {
  // y^2 + y = x^3: type II at 3, conductor 27
  auto e27a3 = curve(0, 0, 1, 0, 0);
  CHECK(e27a3.disc == -27);
  auto d = tate_algorithm(e27a3, 3);
  CHECK(d.kodaira == KodairaType{KodairaType::Family::II, 0});
  CHECK(d.tamagawa == 1);
  CHECK(d.conductor_exponent == 3);

  // y^2 + y = x^3 - 7: type IV* at 3 with rational components, conductor 27
  auto e27a1 = curve(0, 0, 1, 0, -7);
  CHECK(e27a1.disc == -19683);
  auto d2 = tate_algorithm(e27a1, 3);
  CHECK(d2.kodaira == KodairaType{KodairaType::Family::IVStar, 0});
  CHECK(d2.tamagawa == 3);
  CHECK(d2.conductor_exponent == 3);

  // y^2 = x^3 + 1: IV at 2 (c = 3), III at 3 (c = 2), conductor 36
  auto e36 = curve(0, 0, 0, 0, 1);
  auto g36 = conductor_and_global_data(e36);
  CHECK(g36.conductor == 36);
  CHECK(g36.local.at(2).kodaira == KodairaType{KodairaType::Family::IV, 0});
  CHECK(g36.local.at(2).tamagawa == 3);
  CHECK(g36.local.at(3).kodaira == KodairaType{KodairaType::Family::III, 0});
  CHECK(g36.local.at(3).tamagawa == 2);

  // y^2 = x^3 - x: III at 2, conductor 32
  auto e32 = curve(0, 0, 0, -1, 0);
  auto g32 = conductor_and_global_data(e32);
  CHECK(g32.conductor == 32);
  CHECK(g32.local.at(2).kodaira == KodairaType{KodairaType::Family::III, 0});
  CHECK(g32.local.at(2).tamagawa == 2);
}

TEST_CASE("well-known conductors") {
  CHECK(conductor_and_global_data(curve(0, -1, 1, -10, -20)).conductor == 11);
  CHECK(conductor_and_global_data(curve(0, 0, 1, -1, 0)).conductor == 37);
  CHECK(conductor_and_global_data(curve(0, 1, 1, -2, 0)).conductor == 389);
  CHECK(conductor_and_global_data(curve(1, 1, 1, -10, -10)).conductor == 15);
  CHECK(conductor_and_global_data(curve(0, 0, 0, 1, 0)).conductor == 64);
}

TEST_CASE("local minimal models") {
  auto E = curve(0, 0, 0, 0, 1);  // disc = -432, ord_5 = 0
  auto [m1, s1] = local_minimal_model(E, 5);
  CHECK(s1 == 0);
  CHECK(m1 == E);

  // scale up by u = 5 (x -> x/25, y -> y/125): a4 *= 5^4, a6 *= 5^6
  auto scaled = WeierstrassCurve(E.a1 * 5, E.a2 * 25, E.a3 * 125, E.a4 * 625, E.a6 * 15625);
  CHECK(valuation_exact(scaled.disc, 5) == 12);
  auto [m2, s2] = local_minimal_model(scaled, 5);
  CHECK(s2 == 1);
  CHECK(valuation_exact(m2.disc, 5) == 0);

  // any ord < 12 is already minimal at ell >= 5
  auto d = tate_algorithm(scaled, 5);
  CHECK(d.minimality_warning);
  CHECK(d.ord_delta_min == 0);
}

TEST_CASE("traces of Frobenius") {
  CHECK(trace_of_frobenius(curve(0, 0, 0, 1, 0), 3) == 0);    // 4 points with infinity
  CHECK(trace_of_frobenius(curve(0, 0, 0, 1, 1), 5) == -3);   // 9 points with infinity
  CHECK(trace_of_frobenius(curve(0, 1, 0, -1, 0), 5) == -1);  // nonsplit multiplicative
  CHECK(trace_of_frobenius(curve(0, -1, 1, -10, -20), 11) == 1);  // split multiplicative
  CHECK(trace_of_frobenius(curve(0, 0, 1, 0, 0), 3) == 0);        // additive
  CHECK_THROWS_AS(trace_of_frobenius(curve(0, 0, 0, 1, 1), Int(1000003), 1000), Error);
}

TEST_CASE("Hasse bound on random curves") {
  std::mt19937_64 rng(77);
  auto primes = primes_up_to(500);
  for (int i = 0; i < 25; ++i) {
    long a4 = static_cast<long>(rng() % 41) - 20;
    long a6 = static_cast<long>(rng() % 41) - 20;
    WeierstrassCurve E = [&]() -> WeierstrassCurve {
      try {
        return curve(0, 0, 0, a4, a6);
      } catch (const Error&) {
        return curve(0, 0, 0, 1, 1);
      }
    }();
    for (long p : primes) {
      if (valuation_exact(E.disc, p) > 0) continue;
      long a = trace_of_frobenius(E, p);
      CHECK(static_cast<double>(a) * a <= 4.0 * static_cast<double>(p));
    }
  }
}

TEST_CASE("isomorphism invariance of local data") {
  std::mt19937_64 rng(13);
  auto E = curve(1, 0, 1, 4, -6);
  for (Int ell : {Int(2), Int(3), Int(7)}) {
    auto base = tate_algorithm(E, ell);
    for (int i = 0; i < 10; ++i) {
      long r = static_cast<long>(rng() % 7) - 3;
      long s = static_cast<long>(rng() % 7) - 3;
      long t = static_cast<long>(rng() % 7) - 3;
      auto F = E.transformed(r, s, t, 1);
      auto d = tate_algorithm(F, ell);
      CHECK(d.kodaira == base.kodaira);
      CHECK(d.reduction_class == base.reduction_class);
      CHECK(d.tamagawa == base.tamagawa);
      CHECK(d.ord_delta_min == base.ord_delta_min);
      CHECK(d.conductor_exponent == base.conductor_exponent);
    }
  }
}
