#include "ecq/quadfield.hpp"

namespace ecq {

QuadraticField::QuadraticField(const Int& D) : D_(D) {
  if (D <= 0) throw Error(errc::bad_input, "D must be positive (field discriminant is -D)");
  Int md = -D;
  long m4 = static_cast<long>(mpz_fdiv_ui(md.get_mpz_t(), 4));
  bool ok = false;
  if (m4 == 1) {
    ok = is_squarefree(D);
  } else if (m4 == 0) {
    Int q = D / 4;
    long qm4 = static_cast<long>(mpz_fdiv_ui(Int(-q).get_mpz_t(), 4));
    ok = is_squarefree(q) && (qm4 == 2 || qm4 == 3);
  }
  if (!ok)
    throw Error(errc::not_fundamental, "-" + D.get_str() + " is not a fundamental discriminant");
}

std::string splitting_type_str(SplittingType s) {
  switch (s) {
    case SplittingType::Split: return "Split";
    case SplittingType::Inert: return "Inert";
    case SplittingType::Ramified: return "Ramified";
  }
  return "?";
}

SplittingType splitting_type(const Int& ell, const QuadraticField& K) {
  if (!is_prime(ell)) throw Error(errc::non_prime, "ell = " + ell.get_str() + " is not prime");
  if (mpz_divisible_p(K.D().get_mpz_t(), ell.get_mpz_t()))
    return SplittingType::Ramified;
  int k = kronecker_symbol(K.disc(), ell);
  if (k == 1) return SplittingType::Split;
  if (k == -1) return SplittingType::Inert;
  return SplittingType::Ramified;  // ell = 2 with even discriminant
}

std::optional<PermissibleFactorization> permissible_factorization(const Int& N,
                                                                  const QuadraticField& K) {
  if (N < 1) throw Error(errc::bad_input, "N must be >= 1");
  Int g;
  mpz_gcd(g.get_mpz_t(), N.get_mpz_t(), K.D().get_mpz_t());
  if (g != 1)
    throw Error(errc::disc_not_coprime, "gcd(D, N) = " + g.get_str() + " != 1");
  PermissibleFactorization f{1, 1, 0};
  for (const auto& pp : factorize(N)) {
    switch (splitting_type(pp.prime, K)) {
      case SplittingType::Split:
        f.n_plus *= power(pp.prime, static_cast<unsigned long>(pp.exponent));
        break;
      case SplittingType::Inert:
        if (pp.exponent >= 2) return std::nullopt;  // N- must stay squarefree
        f.n_minus *= pp.prime;
        ++f.nu_minus;
        break;
      case SplittingType::Ramified:
        return std::nullopt;  // unreachable under (D, N) = 1
    }
  }
  return f;
}

}  // namespace ecq
