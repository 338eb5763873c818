#pragma once

// Exact integer utilities shared by every module: valuations with an
// infinity sentinel, primality, Kronecker symbols, and deterministic
// factorization (trial division + Pollard rho).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ecq/errors.hpp"

namespace ecq {

using Int = mpz_class;

// Integer extended by +infinity; infinity absorbs addition and is the
// greatest element. ord_p(0) = infinity lives here, as do Kolyvagin indices.
class Valuation {
 public:
  Valuation(long v) : finite_(true), v_(v) {}  // NOLINT: implicit by design
  static Valuation infinity() { return Valuation(); }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }
  long value() const {
    if (!finite_) throw Error(errc::internal, "value() of infinite valuation");
    return v_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

  Valuation operator+(const Valuation& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return Valuation(v_ + o.v_);
  }
  static Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

  std::string str() const { return finite_ ? std::to_string(v_) : "inf"; }

 private:
  Valuation() : finite_(false), v_(0) {}
  bool finite_;
  long v_;
};

// ord_p with ord_p(0) = +infinity.
Valuation padic_valuation_of_integer(const Int& n, const Int& p);

// ord_p for n != 0 (throws on 0).
long valuation_exact(const Int& n, const Int& p);

bool is_prime(const Int& n);

Int power(const Int& base, unsigned long exp);

// Least nonnegative residue.
Int mod_reduce(const Int& a, const Int& m);

// Inverse of a modulo m; gcd(a, m) = 1 required.
Int mod_inverse(const Int& a, const Int& m);

// Kronecker symbol (a|n), full generality, via quadratic reciprocity.
int kronecker_symbol(Int a, Int n);

std::vector<long> primes_up_to(long bound);

struct PrimePower {
  Int prime;
  long exponent;
};

// Factors |n| into ascending prime powers. Trial division to 1e5 then
// Pollard rho (Brent variant, fixed seed); deterministic across runs.
// Throws FACTOR_BUDGET naming the unfactored cofactor when rho stalls.
std::vector<PrimePower> factorize(const Int& n);

bool is_squarefree(const Int& n);

}  // namespace ecq
