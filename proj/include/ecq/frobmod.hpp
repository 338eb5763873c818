#pragma once

// Desk-scale checks of the Tamagawa-cohomology identities on synthetic
// finite modules with a Frobenius action: for M = (+) Z/p^{e_i} and an
// invertible F, the unramified H^0 and H^1 are ker(F - 1) and coker(F - 1),
// and their p-lengths agree (Herbrand). The degree-2 restriction identity
// models an inert prime, with the quadratic twist acting through -F.

#include <random>
#include <vector>

#include "ecq/clause.hpp"
#include "ecq/integers.hpp"
#include "ecq/tate_period.hpp"

namespace ecq {

struct FiniteFrobeniusModule {
  long p = 0;
  std::vector<long> cyclic_orders;             // e_1 >= ... >= e_r >= 1
  std::vector<std::vector<Int>> frobenius;     // column j = image of generator j

  // Validates: exponents sorted positive, entries respect the order
  // relations (F[i][j] = 0 mod p^(e_i - e_j) when e_i > e_j), F invertible
  // on M (det a unit mod p), and total order within the representable cap.
  FiniteFrobeniusModule(long p, std::vector<long> orders, std::vector<std::vector<Int>> F);

  long total_exponent() const;  // order of M is p^total_exponent
};

inline constexpr long kEnumerationCap = 15625;  // 5^6

// p-length of ker(F - 1): exhaustive enumeration for |M| <= cap, otherwise
// a kernel-lattice computation on the matrix presentation.
long h0_length(const FiniteFrobeniusModule& M, long enumeration_cap = kEnumerationCap);

// p-length of coker(F - 1): enumeration of the image below the cap,
// otherwise Smith normal form of [F - 1 | diag(p^e)].
long h1_length(const FiniteFrobeniusModule& M, long enumeration_cap = kEnumerationCap);

struct AdditivityCheck {
  bool holds = false;
  long lhs = 0;    // lg coker(F^2 - 1)
  long rhs_a = 0;  // lg coker(F - 1)
  long rhs_b = 0;  // lg coker(-F - 1)
};

// Degree-2 unramified restriction: lg coker(F^2-1) = lg coker(F-1) + lg coker(-F-1).
AdditivityCheck verify_restriction_additivity(const FiniteFrobeniusModule& M,
                                              long enumeration_cap = kEnumerationCap);

// Local Tamagawa factors above p vanish when E[p] is not finite at p; the
// converse is not claimed, so a finite-at-p input stays Inconclusive.
ClauseVerdict tam_p_zero_check(const TatePeriodData& tate_data);

// Seeded random module with invertible Frobenius, order <= p^max_total_exp.
FiniteFrobeniusModule random_module(std::mt19937_64& rng, long p, long max_total_exp);

}  // namespace ecq
