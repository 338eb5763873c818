#pragma once

// Kolyvagin primes with indices M(ell) = min{ord_p(ell+1), ord_p(a(ell))},
// admissible primes, and the lazy enumeration of squarefree products that
// make up Lambda and Lambda' (with the +/- parity split).

#include <mutex>
#include <optional>
#include <vector>

#include "ecq/quadfield.hpp"
#include "ecq/tate.hpp"

namespace ecq {

struct KolyvaginPrime {
  long ell = 0;
  Valuation index = Valuation(0);  // M(ell) >= 1

  friend bool operator==(const KolyvaginPrime& a, const KolyvaginPrime& b) {
    return a.ell == b.ell && a.index == b.index;
  }
};

struct AdmissiblePrime {
  long q = 0;

  friend bool operator==(const AdmissiblePrime& a, const AdmissiblePrime& b) { return a.q == b.q; }
};

// Shared a(ell) cache; all writers compute the same value, so last-write-wins
// insertion under the lock is safe.
class TraceCache {
 public:
  long get(const WeierstrassCurve& minimal_model, long ell, long budget = 1000000);

 private:
  std::mutex mutex_;
  std::map<long, long> values_;
};

// min{ord_p(ell+1), ord_p(a_ell)}; ord_p(0) = +infinity absorbs a(ell) = 0.
Valuation kolyvagin_index(const Int& ell, const Int& a_ell, const Int& p);

// All Kolyvagin primes ell <= bound for (curve, p, K): ell coprime to N*D*p,
// inert in K, index >= 1. Ascending; deterministic.
std::vector<KolyvaginPrime> sieve_kolyvagin(const CurveGlobalData& curve_data, long p,
                                            const QuadraticField& K, long bound,
                                            TraceCache& traces);

// All admissible primes q <= bound: q coprime to N*D*p, inert in K,
// p does not divide q^2 - 1, and ord_p((q+1)^2 - a(q)^2) >= 1.
std::vector<AdmissiblePrime> sieve_admissible(const CurveGlobalData& curve_data, long p,
                                              const QuadraticField& K, long bound,
                                              TraceCache& traces);

// M(n) = min{M(ell) : ell | n}; +infinity for the empty product n = 1.
// Repeated primes are rejected (n must be squarefree).
Valuation index_of_product(const std::vector<KolyvaginPrime>& primes);

enum class ParityClass { Plus, Minus };
inline ParityClass parity_class(int nu) { return nu % 2 == 0 ? ParityClass::Plus : ParityClass::Minus; }

// Lazy ascending-product enumeration of squarefree products of a prime list,
// starting with the empty product 1. Lambda is exponential in the prime
// list, so callers bound the walk by a product count cap.
class SquarefreeProducts {
 public:
  struct Item {
    Int product;
    std::vector<long> primes;
  };

  explicit SquarefreeProducts(std::vector<long> primes);
  std::optional<Item> next();  // ascending by product value

 private:
  struct HeapEntry {
    Int product;
    size_t next_index;         // primes_[next_index...] may still be appended
    std::vector<long> primes;
  };
  std::vector<long> primes_;
  std::vector<HeapEntry> heap_;
  bool emitted_unit_ = false;
};

}  // namespace ecq
