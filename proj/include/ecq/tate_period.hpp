#pragma once

// p-adic Tate period for multiplicative reduction at p: solves j(q) = j(E)
// in pZ_p by Newton iteration on the truncated q-expansion of j, then
// derives the Iwasawa log, the L-invariant log_p(q)/ord_p(q), and the two
// predicates on E[p] that the theorem gates consume:
//   not_finite_at_p  <=>  p does not divide ord_p(q)
//   hyp_L_holds      <=>  ord_p(log_p q) = 1

#include "ecq/padic.hpp"
#include "ecq/tate.hpp"

namespace ecq {

struct TatePeriodData {
  long ord_q = 0;  // = ord_p(disc_min) = -ord_p(j)
  PadicNumber q;
  PadicNumber log_q;
  PadicNumber l_invariant;
  bool not_finite_at_p = false;
  bool hyp_L_holds = false;
  bool split = false;
};

// Coefficients of q * j(q) = 1 + 744 q + 196884 q^2 + ... computed exactly
// over the integers from E4^3 / (Delta/q); cached and shared read-only.
std::vector<Int> j_series_coefficients(long count);

// Requires multiplicative reduction at p (ord_p(c4) = 0, ord_p(disc) >= 1;
// this already forces p-minimality). Raises PRECISION_EXHAUSTED rather than
// report an uncertified predicate.
TatePeriodData compute_tate_period(const WeierstrassCurve& curve, long p, long abs_precision = 20);

// log_p(q) / ord_p(q) at working precision.
PadicNumber l_invariant(const TatePeriodData& data);

}  // namespace ecq
