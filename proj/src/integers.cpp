#include "ecq/integers.hpp"

#include <algorithm>
#include <mutex>

namespace ecq {

Valuation padic_valuation_of_integer(const Int& n, const Int& p) {
  if (n == 0) return Valuation::infinity();
  return Valuation(valuation_exact(n, p));
}

long valuation_exact(const Int& n, const Int& p) {
  if (n == 0) throw Error(errc::internal, "valuation_exact(0)");
  if (p < 2) throw Error(errc::bad_input, "valuation base must be >= 2");
  Int reduced;
  return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

Int power(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int mod_reduce(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(errc::internal, "non-invertible element mod " + m.get_str());
  return r;
}

int kronecker_symbol(Int a, Int n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  bool a_even = mpz_even_p(a.get_mpz_t()) != 0;
  bool n_even = mpz_even_p(n.get_mpz_t()) != 0;
  if (a_even && n_even) return 0;

  int k = 1;
  // strip factors of 2 from n; each contributes (2|a) = (-1)^((a^2-1)/8)
  long v2 = 0;
  while (mpz_even_p(n.get_mpz_t())) {
    n /= 2;
    ++v2;
  }
  if (v2 % 2 == 1) {
    long am8 = mpz_fdiv_ui(a.get_mpz_t(), 8);
    if (am8 == 3 || am8 == 5) k = -k;
    // a even would have been caught above unless n odd originally; (2|even)=0
    if (am8 % 2 == 0) return 0;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  if (n == 1) return k;

  // Jacobi loop on odd positive n.
  a = mod_reduce(a, n);
  while (a != 0) {
    long v = 0;
    while (mpz_even_p(a.get_mpz_t())) {
      a /= 2;
      ++v;
    }
    long nm8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
    if (v % 2 == 1 && (nm8 == 3 || nm8 == 5)) k = -k;
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && nm8 % 4 == 3) k = -k;
    std::swap(a, n);
    a = mod_reduce(a, n);
  }
  return n == 1 ? k : 0;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
  sieve[0] = sieve[1] = false;
  for (long i = 2; i * i <= bound; ++i)
    if (sieve[static_cast<size_t>(i)])
      for (long j = i * i; j <= bound; j += i) sieve[static_cast<size_t>(j)] = false;
  for (long i = 2; i <= bound; ++i)
    if (sieve[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

namespace {

constexpr long kTrialBound = 100000;

const std::vector<long>& trial_primes() {
  static const std::vector<long> primes = primes_up_to(kTrialBound);
  return primes;
}

// Brent-cycle Pollard rho with a fixed sequence of polynomial offsets.
// Deterministic; returns 0 if every offset stalls within the budget.
Int pollard_rho(const Int& n) {
  constexpr unsigned long kIterBudget = 1UL << 21;
  for (long c = 1; c <= 24; ++c) {
    Int x = 2, y = 2, d = 1;
    Int diff, q = 1;
    unsigned long iter = 0;
    unsigned long power_len = 1;
    while (d == 1 && iter < kIterBudget) {
      x = y;
      for (unsigned long i = 0; i < power_len && iter < kIterBudget; ++i) {
        y = mod_reduce(y * y + c, n);
        diff = x - y;
        if (diff == 0) break;
        q = mod_reduce(q * diff, n);
        ++iter;
        if (iter % 128 == 0) {
          mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
          if (d != 1) break;
        }
      }
      if (d == 1) {
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      power_len *= 2;
      if (x == y) break;  // cycle without factor; next offset
    }
    if (d != 1 && d != n) return d;
  }
  return 0;
}

void factor_rec(const Int& n, std::vector<Int>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Int d = pollard_rho(n);
  if (d == 0)
    throw Error(errc::factor_budget, "factorization budget exceeded; unfactored cofactor " + n.get_str());
  factor_rec(d, primes);
  factor_rec(n / d, primes);
}

}  // namespace

std::vector<PrimePower> factorize(const Int& n) {
  if (n == 0) throw Error(errc::bad_input, "factorize(0)");
  Int m = abs(n);
  std::vector<PrimePower> out;
  for (long p : trial_primes()) {
    if (m == 1) break;
    if (Int(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      Int reduced;
      long e = static_cast<long>(
          mpz_remove(reduced.get_mpz_t(), m.get_mpz_t(), Int(p).get_mpz_t()));
      m = reduced;
      out.push_back({Int(p), e});
    }
  }
  if (m > 1) {
    if (is_prime(m)) {
      out.push_back({m, 1});
    } else {
      std::vector<Int> rest;
      factor_rec(m, rest);
      std::sort(rest.begin(), rest.end());
      for (size_t i = 0; i < rest.size();) {
        size_t j = i;
        while (j < rest.size() && rest[j] == rest[i]) ++j;
        out.push_back({rest[i], static_cast<long>(j - i)});
        i = j;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (const auto& pp : factorize(n))
    if (pp.exponent > 1) return false;
  return true;
}

}  // namespace ecq
