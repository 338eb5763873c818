#include "ecq/sieves.hpp"

#include <algorithm>

namespace ecq {

long TraceCache::get(const WeierstrassCurve& minimal_model, long ell, long budget) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = values_.find(ell);
    if (it != values_.end()) return it->second;
  }
  long a = trace_of_frobenius(minimal_model, Int(ell), budget);
  std::lock_guard<std::mutex> lock(mutex_);
  values_[ell] = a;
  return a;
}

Valuation kolyvagin_index(const Int& ell, const Int& a_ell, const Int& p) {
  return Valuation::min(padic_valuation_of_integer(ell + 1, p),
                        padic_valuation_of_integer(a_ell, p));
}

namespace {

// shared exclusion test: candidates must avoid N, D and p and be inert in K
bool is_inert_candidate(long ell, const CurveGlobalData& g, long p, const QuadraticField& K) {
  if (ell == p) return false;
  Int L(ell);
  if (mpz_divisible_p(g.conductor.get_mpz_t(), L.get_mpz_t())) return false;
  if (mpz_divisible_p(K.D().get_mpz_t(), L.get_mpz_t())) return false;
  return splitting_type(L, K) == SplittingType::Inert;
}

}  // namespace

std::vector<KolyvaginPrime> sieve_kolyvagin(const CurveGlobalData& curve_data, long p,
                                            const QuadraticField& K, long bound,
                                            TraceCache& traces) {
  std::vector<KolyvaginPrime> out;
  for (long ell : primes_up_to(bound)) {
    if (!is_inert_candidate(ell, curve_data, p, K)) continue;
    long a = traces.get(curve_data.minimal_model, ell);
    Valuation m = kolyvagin_index(Int(ell), Int(a), Int(p));
    if (m >= Valuation(1)) out.push_back({ell, m});
  }
  return out;
}

std::vector<AdmissiblePrime> sieve_admissible(const CurveGlobalData& curve_data, long p,
                                              const QuadraticField& K, long bound,
                                              TraceCache& traces) {
  std::vector<AdmissiblePrime> out;
  for (long q : primes_up_to(bound)) {
    if (!is_inert_candidate(q, curve_data, p, K)) continue;
    Int Q(q);
    if (padic_valuation_of_integer(Q * Q - 1, Int(p)) >= Valuation(1)) continue;
    long a = traces.get(curve_data.minimal_model, q);
    Int Aq(a);
    if (padic_valuation_of_integer((Q + 1) * (Q + 1) - Aq * Aq, Int(p)) >= Valuation(1))
      out.push_back({q});
  }
  return out;
}

Valuation index_of_product(const std::vector<KolyvaginPrime>& primes) {
  Valuation m = Valuation::infinity();
  std::vector<long> seen;
  for (const auto& kp : primes) {
    if (std::find(seen.begin(), seen.end(), kp.ell) != seen.end())
      throw Error(errc::repeated_prime, "repeated prime " + std::to_string(kp.ell) + " in product");
    seen.push_back(kp.ell);
    m = Valuation::min(m, kp.index);
  }
  return m;
}

SquarefreeProducts::SquarefreeProducts(std::vector<long> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
}

std::optional<SquarefreeProducts::Item> SquarefreeProducts::next() {
  // heap keyed by the value of the entry's next child, product * primes[next_index]
  auto key = [this](const HeapEntry& e) { return e.product * primes_[e.next_index]; };
  auto cmp = [&](const HeapEntry& a, const HeapEntry& b) { return key(a) > key(b); };
  if (!emitted_unit_) {
    emitted_unit_ = true;
    heap_.clear();
    if (!primes_.empty()) heap_.push_back({Int(1), 0, {}});
    return Item{Int(1), {}};
  }
  if (heap_.empty()) return std::nullopt;
  std::pop_heap(heap_.begin(), heap_.end(), cmp);
  HeapEntry e = std::move(heap_.back());
  heap_.pop_back();

  HeapEntry child{e.product * primes_[e.next_index], e.next_index + 1, e.primes};
  child.primes.push_back(primes_[e.next_index]);
  Item item{child.product, child.primes};
  if (e.next_index + 1 < primes_.size()) {
    e.next_index += 1;
    heap_.push_back(std::move(e));
    std::push_heap(heap_.begin(), heap_.end(), cmp);
  }
  if (child.next_index < primes_.size()) {
    heap_.push_back(std::move(child));
    std::push_heap(heap_.begin(), heap_.end(), cmp);
  }
  return item;
}

}  // namespace ecq
