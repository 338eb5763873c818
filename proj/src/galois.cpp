#include "ecq/galois.hpp"

namespace ecq {

std::string irreducibility_status_str(IrreducibilityStatus s) {
  switch (s) {
    case IrreducibilityStatus::CertifiedIrreducible: return "CertifiedIrreducible";
    case IrreducibilityStatus::CertifiedReducible: return "CertifiedReducible";
    case IrreducibilityStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string clubs_status_str(ClubsStatus s) {
  return s == ClubsStatus::Certified ? "Certified" : "Inconclusive";
}

std::pair<IrreducibilityStatus, std::optional<long>> irreducibility_witness(
    const CurveGlobalData& curve_data, long p, long search_bound, TraceCache& traces,
    bool external_isogeny_kernel) {
  if (external_isogeny_kernel) return {IrreducibilityStatus::CertifiedReducible, std::nullopt};
  Int P(p);
  for (long ell : primes_up_to(search_bound)) {
    if (ell == p) continue;
    if (mpz_divisible_ui_p(curve_data.minimal_discriminant.get_mpz_t(),
                           static_cast<unsigned long>(ell)))
      continue;  // witnesses must be good primes
    long a = traces.get(curve_data.minimal_model, ell);
    Int disc = Int(a) * a - 4 * Int(ell);
    if (kronecker_symbol(disc, P) == -1)
      return {IrreducibilityStatus::CertifiedIrreducible, ell};
  }
  return {IrreducibilityStatus::Inconclusive, std::nullopt};
}

std::set<Int> ramification_set(const std::map<Int, LocalReductionData>& local_table, const Int& p) {
  std::set<Int> ram;
  for (const auto& [ell, data] : local_table) {
    if (ell == p) continue;
    if (data.conductor_exponent != 1) continue;  // ell || N means multiplicative
    if (Valuation(0) == padic_valuation_of_integer(Int(data.ord_delta_min), p))
      ram.insert(ell);
  }
  return ram;
}

bool finite_at_p(const TatePeriodData& tate_data) { return !tate_data.not_finite_at_p; }

ClubsStatus derive_clubs(const ResidualCertificate& partial, long p, std::string* note) {
  if (partial.status == IrreducibilityStatus::CertifiedIrreducible && !partial.ram_set.empty() &&
      p >= 5) {
    if (note)
      *note = "irreducible with Ram nonempty: a multiplicative ell || N ramified mod p gives a "
              "unipotent of order p in the image, so the image contains SL2(F_p) and equals "
              "GL2(F_p); both conditions follow for p >= 5";
    return ClubsStatus::Certified;
  }
  if (note) {
    if (partial.status != IrreducibilityStatus::CertifiedIrreducible)
      *note = "missing premise: irreducibility not certified";
    else if (partial.ram_set.empty())
      *note = "missing premise: Ram is empty";
    else
      *note = "missing premise: p < 5";
  }
  return ClubsStatus::Inconclusive;
}

std::string heart4_auto_note() {
  return "local H^1 vanishing at ell^2 | N+ holds automatically for elliptic curves with p >= 5; "
         "recorded without computation";
}

ResidualCertificate build_certificate(const CurveGlobalData& curve_data, long p,
                                      long witness_bound,
                                      const std::optional<TatePeriodData>& tate_data,
                                      TraceCache& traces) {
  ResidualCertificate cert;
  auto [status, witness] = irreducibility_witness(curve_data, p, witness_bound, traces);
  cert.status = status;
  cert.witness = witness;
  cert.ram_set = ramification_set(curve_data.local, Int(p));
  if (tate_data) cert.finite_at_p = finite_at_p(*tate_data);
  cert.clubs = derive_clubs(cert, p, &cert.clubs_note);
  return cert;
}

}  // namespace ecq
