#pragma once

// Imaginary quadratic fields Q(sqrt(-D)) of fundamental discriminant -D:
// prime splitting behaviour and permissible factorizations N = N+ * N-.

#include <optional>

#include "ecq/integers.hpp"

namespace ecq {

class QuadraticField {
 public:
  // D > 0 with -D a fundamental discriminant. Non-fundamental input is
  // rejected, not silently corrected.
  explicit QuadraticField(const Int& D);

  const Int& D() const { return D_; }
  Int disc() const { return -D_; }

 private:
  Int D_;
};

enum class SplittingType { Split, Inert, Ramified };

std::string splitting_type_str(SplittingType s);

SplittingType splitting_type(const Int& ell, const QuadraticField& K);

struct PermissibleFactorization {
  Int n_plus;
  Int n_minus;
  int nu_minus = 0;  // number of prime factors of n_minus
};

// Routes split primes of N into n_plus and inert primes into n_minus.
// Absent when some inert prime divides N to order >= 2 or some prime of N
// ramifies. Requires gcd(D, N) = 1.
std::optional<PermissibleFactorization> permissible_factorization(const Int& N,
                                                                  const QuadraticField& K);

}  // namespace ecq
