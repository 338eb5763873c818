#pragma once

// Predicates on the residual mod-p representation of a curve, certified by
// exact arithmetic where a certificate exists and reported Inconclusive
// where it does not. No representation is ever materialized: everything is
// decided through Frobenius traces, discriminant valuations and the Tate
// period.

#include <optional>
#include <set>
#include <string>

#include "ecq/sieves.hpp"
#include "ecq/tate_period.hpp"

namespace ecq {

enum class IrreducibilityStatus { CertifiedIrreducible, CertifiedReducible, Inconclusive };
enum class ClubsStatus { Certified, Inconclusive };

std::string irreducibility_status_str(IrreducibilityStatus s);
std::string clubs_status_str(ClubsStatus s);

struct ResidualCertificate {
  IrreducibilityStatus status = IrreducibilityStatus::Inconclusive;
  std::optional<long> witness;       // good prime certifying irreducibility
  std::set<Int> ram_set;             // primes ell != p, ell || N, mod-p rep ramified
  std::optional<bool> finite_at_p;   // only defined for multiplicative reduction at p
  ClubsStatus clubs = ClubsStatus::Inconclusive;
  std::string clubs_note;
};

// Scans good primes ell <= search_bound, ell != p: when the Frobenius
// characteristic polynomial x^2 - a(ell) x + ell is irreducible mod p
// (discriminant a nonresidue), no Galois-stable line can exist. Reducible
// verdicts require an externally supplied rational p-isogeny kernel.
std::pair<IrreducibilityStatus, std::optional<long>> irreducibility_witness(
    const CurveGlobalData& curve_data, long p, long search_bound, TraceCache& traces,
    bool external_isogeny_kernel = false);

// Ram set: ell != p with ell || N and p not dividing ord_ell(disc_min).
std::set<Int> ramification_set(const std::map<Int, LocalReductionData>& local_table, const Int& p);

// E[p] finite at p  <=>  p | ord_p(q).
bool finite_at_p(const TatePeriodData& tate_data);

// Certified when irreducibility is certified, Ram != {} and p >= 5: a
// ramified ell || N forces a unipotent of order p in the image, the image
// then contains SL_2(F_p), and the diagonal-element condition follows for
// p >= 5 since the image is all of GL_2(F_p).
ClubsStatus derive_clubs(const ResidualCertificate& partial, long p, std::string* note);

// For elliptic curves with p >= 5 the local H^1 vanishing at primes with
// ell^2 | N+ holds automatically; recorded, never computed.
std::string heart4_auto_note();

// Assembles the full certificate for a curve.
ResidualCertificate build_certificate(const CurveGlobalData& curve_data, long p,
                                      long witness_bound,
                                      const std::optional<TatePeriodData>& tate_data,
                                      TraceCache& traces);

}  // namespace ecq
