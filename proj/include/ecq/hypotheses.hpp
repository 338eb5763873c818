#pragma once

// Theorem gates: three-valued evaluation of every clause of the rank-one /
// BSD-type theorems for elliptic curves with multiplicative reduction at p,
// over a bundle of precomputed invariants. Gates are pure functions; all
// failures are verdicts with evidence, never exceptions. Selmer coranks,
// analytic ranks and Sha data are external inputs only, echoed as such.

#include <optional>
#include <set>
#include <vector>

#include "ecq/clause.hpp"
#include "ecq/galois.hpp"
#include "ecq/quadfield.hpp"

namespace ecq {

enum class TheoremId { ThmEQ, ThmEBSD, ThmEMain, ThmERank, Parity };
enum class TheoremVerdict { Applies, DoesNotApply, Inconclusive };

std::string theorem_id_str(TheoremId id);
std::string theorem_verdict_str(TheoremVerdict v);

struct Conclusion {
  std::string id;
  std::string text;
};

struct TheoremReport {
  TheoremId theorem_id = TheoremId::ThmEMain;
  std::vector<ClauseVerdict> clauses;
  TheoremVerdict verdict = TheoremVerdict::Inconclusive;
  std::vector<Conclusion> conclusions;
  nlohmann::json external_inputs_used = nlohmann::json::object();
};

// External analytic/arithmetic inputs; assumed, never computed.
struct ExternalInputs {
  std::optional<long> selmer_corank;
  std::optional<long> analytic_rank;
  std::optional<long> r_plus;
  std::optional<long> r_minus;
  std::optional<long> lhs_valuation;
  std::optional<long> sha_valuation;
};

// Everything a gate may consult, precomputed. Tests synthesize these
// directly to exercise clause isolation.
struct InvariantBundle {
  Int N = 1;
  long p = 5;
  Int D = 1;
  std::map<Int, LocalReductionData> local;
  SplittingType p_splitting = SplittingType::Inert;
  bool coprime_DN = true;
  std::optional<PermissibleFactorization> factorization;
  std::optional<TatePeriodData> tate;
  ResidualCertificate certificate;
  bool spade3_exclude_p = false;  // alternate reading of the two-primes count
};

// The three clauses of Hypothesis spade (ids spade.1, spade.2, spade.3).
std::vector<ClauseVerdict> check_spade(const InvariantBundle& b);

// Hypothesis heart = spade plus the automatic local clause heart.4.
std::vector<ClauseVerdict> check_heart(const InvariantBundle& b);

// Main nonvanishing gate: p || N, then (a) p >= 5 and p split, (b)
// irreducibility, (c) not finite at p plus the L-invariant valuation for
// split multiplicative reduction, (d) spade with even nu(N-).
TheoremReport gate_thm_main(const InvariantBundle& b);

// Rank-one criterion over Q: clauses (a)-(f), the last the external Selmer
// corank.
TheoremReport gate_thm_EQ(const InvariantBundle& b, const ExternalInputs& ext);

// p-part BSD identity for analytic rank one: clauses (a)-(e) plus external
// analytic rank; on Applies emits the identity with the computed Tamagawa
// valuation and checks consistency of optional external valuations.
TheoremReport gate_bsd(const InvariantBundle& b, const ExternalInputs& ext);

// Kolyvagin-system order and parity, conditional on the main gate:
// ord(kappa_infinity) = min{r+, r-} - 1, and the parity conclusions.
std::pair<TheoremReport, TheoremReport> gate_rank_and_parity(const InvariantBundle& b,
                                                             const TheoremReport& main_report,
                                                             const ExternalInputs& ext);

}  // namespace ecq
