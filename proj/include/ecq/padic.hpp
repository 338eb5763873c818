#pragma once

// Capped-precision p-adic numbers with tracked valuation, plus the Iwasawa
// branch of the p-adic logarithm (log_p p = 0, Teichmueller part killed).
//
// A nonzero value is stored as p^valuation * unit, the unit given by its
// little-endian base-p digits with digit[0] != 0. The value is known modulo
// p^abs_precision; the zero element stands for "indistinguishable from 0 at
// this precision" and carries valuation +infinity. Values are immutable and
// every operation is pure, so concurrent use needs no locking.

#include <cstdint>
#include <string>
#include <vector>

#include "ecq/integers.hpp"

namespace ecq {

class PadicNumber {
 public:
  static PadicNumber zero(long p, long abs_precision);
  static PadicNumber from_integer(const Int& n, long p, long abs_precision);
  static PadicNumber from_rational(const Int& num, const Int& den, long p, long abs_precision);

  long prime() const { return prime_; }
  Valuation valuation() const { return valuation_; }
  long abs_precision() const { return abs_precision_; }
  bool is_zero() const { return valuation_.is_infinite(); }
  long relative_precision() const;  // abs_precision - valuation (0 for zero)
  const std::vector<uint32_t>& unit_digits() const { return unit_digits_; }

  // Unit part as an integer in [0, p^relative_precision).
  Int unit_part() const;
  // Canonical representative p^v * unit; valuation must be >= 0.
  Int lift() const;

  PadicNumber operator+(const PadicNumber& o) const;
  PadicNumber operator-() const;
  PadicNumber operator-(const PadicNumber& o) const;
  PadicNumber operator*(const PadicNumber& o) const;
  PadicNumber operator/(const PadicNumber& o) const;

  // Exact scaling by a nonzero integer; keeps relative precision.
  PadicNumber mul_integer(const Int& m) const;
  PadicNumber div_integer(const Int& m) const;

  // Truncation to a lower absolute precision.
  PadicNumber truncated(long abs_precision) const;

  // Same image in Z_p / p^min(prec_a, prec_b)?
  bool agrees_with(const PadicNumber& o) const;

  // Strict structural equality (prime, valuation, digits, precision).
  friend bool operator==(const PadicNumber& a, const PadicNumber& b);

  std::string str() const;  // e.g. "5^2 * 113 + O(5^9)" or "O(5^4)"

 private:
  PadicNumber(long p, long abs_precision);
  // Builds canonical form from p^v * u with u known mod p^(abs_precision - v).
  static PadicNumber make(long p, long v, const Int& unit, long abs_precision);
  static void check_same_field(const PadicNumber& a, const PadicNumber& b);

  long prime_;
  Valuation valuation_;
  std::vector<uint32_t> unit_digits_;  // little-endian, size == relative precision
  long abs_precision_;
};

// Iwasawa-branch logarithm: for x = p^v * w * <x> with w a Teichmueller root
// of unity and <x> in 1 + pZ_p, returns log(<x>) by the alternating series,
// truncated so every dropped term has valuation at least the certified
// output precision. Throws LOG_OF_ZERO on zero input.
PadicNumber padic_log_iwasawa(const PadicNumber& x);

// Teichmueller lift of a residue class a mod p (a not divisible by p),
// computed by iterating x -> x^p to its fixed point.
PadicNumber teichmuller_lift(long residue, long p, long abs_precision);

}  // namespace ecq
