#include "ecq/hypotheses.hpp"

#include <algorithm>

namespace ecq {

std::string theorem_id_str(TheoremId id) {
  switch (id) {
    case TheoremId::ThmEQ: return "ThmEQ";
    case TheoremId::ThmEBSD: return "ThmEBSD";
    case TheoremId::ThmEMain: return "ThmEMain";
    case TheoremId::ThmERank: return "ThmERank";
    case TheoremId::Parity: return "Parity";
  }
  return "?";
}

std::string theorem_verdict_str(TheoremVerdict v) {
  switch (v) {
    case TheoremVerdict::Applies: return "Applies";
    case TheoremVerdict::DoesNotApply: return "DoesNotApply";
    case TheoremVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

TheoremVerdict fold(const std::vector<ClauseVerdict>& clauses) {
  bool all_hold = true;
  for (const auto& c : clauses) {
    if (c.status == ClauseStatus::Fails) return TheoremVerdict::DoesNotApply;
    if (c.status != ClauseStatus::Holds) all_hold = false;
  }
  return all_hold ? TheoremVerdict::Applies : TheoremVerdict::Inconclusive;
}

std::vector<Int> prime_list(const Int& n) {
  std::vector<Int> out;
  if (n == 1) return out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

bool exactly_divides_N(const InvariantBundle& b, const Int& ell) {
  auto it = b.local.find(ell);
  return it != b.local.end() && it->second.conductor_exponent == 1;
}

long ord_delta_at(const InvariantBundle& b, const Int& ell) {
  auto it = b.local.find(ell);
  return it == b.local.end() ? 0 : it->second.ord_delta_min;
}

bool is_pm_one_mod_p(const Int& ell, long p) {
  long r = static_cast<long>(mpz_fdiv_ui(ell.get_mpz_t(), static_cast<unsigned long>(p)));
  return r == 1 || r == p - 1;
}

std::string istr(const Int& n) { return n.get_str(); }

nlohmann::json prime_strings(const std::set<Int>& s) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : s) a.push_back(istr(x));
  return a;
}

// clause (b) of the main gate / clause (c) of the rank-one gate
ClauseVerdict irreducibility_clause(const std::string& id, const ResidualCertificate& cert) {
  switch (cert.status) {
    case IrreducibilityStatus::CertifiedIrreducible:
      return ClauseVerdict::holds(id, {{"witness", cert.witness ? *cert.witness : 0},
                                       {"certificate", "CertifiedIrreducible"}});
    case IrreducibilityStatus::CertifiedReducible:
      return ClauseVerdict::fails(id, {{"certificate", "CertifiedReducible"}});
    case IrreducibilityStatus::Inconclusive:
      return ClauseVerdict::inconclusive(id, "irreducibility witness search exhausted");
  }
  return ClauseVerdict::inconclusive(id, "unreachable");
}

// not finite at p, plus the L-invariant valuation when split multiplicative
ClauseVerdict finiteness_clause(const std::string& id, const InvariantBundle& b) {
  if (!b.tate)
    return ClauseVerdict::inconclusive(id, "no Tate period data at p");
  const TatePeriodData& t = *b.tate;
  nlohmann::json ev{{"ord_q", t.ord_q},
                    {"split", t.split},
                    {"ord_log_q", t.log_q.is_zero() ? "unresolved" : t.log_q.valuation().str()}};
  if (!t.not_finite_at_p) {
    ev["reason"] = "p divides ord_p(q): E[p] is finite at p";
    return ClauseVerdict::fails(id, ev);
  }
  if (t.split && !t.hyp_L_holds) {
    ev["reason"] = "split multiplicative but ord_p(log_p q) != 1";
    return ClauseVerdict::fails(id, ev);
  }
  return ClauseVerdict::holds(id, ev);
}

std::vector<ClauseVerdict> thm11_a_to_e(const InvariantBundle& b) {
  std::vector<ClauseVerdict> out;
  Int P(b.p);

  // (a) multiplicative reduction at p, i.e. p || N
  if (exactly_divides_N(b, P)) {
    out.push_back(ClauseVerdict::holds(
        "thm11.a", {{"p", b.p},
                    {"reduction", reduction_class_str(b.local.at(P).reduction_class)}}));
  } else {
    auto it = b.local.find(P);
    out.push_back(ClauseVerdict::fails(
        "thm11.a",
        {{"p", b.p},
         {"reduction", it == b.local.end() ? "Good" : reduction_class_str(it->second.reduction_class)}}));
  }

  // (b) p does not divide ord_p(disc); for split multiplicative reduction
  // additionally log_p q in p Z_p^x
  {
    long ordp_delta = ord_delta_at(b, P);
    bool first = ordp_delta % b.p != 0 && ordp_delta > 0;
    bool split = b.tate && b.tate->split;
    if (!first) {
      out.push_back(ClauseVerdict::fails(
          "thm11.b", {{"ord_p_delta", ordp_delta}, {"reason", "p | ord_p(disc_min)"}}));
    } else if (split && !b.tate->hyp_L_holds) {
      out.push_back(ClauseVerdict::fails(
          "thm11.b", {{"ord_p_delta", ordp_delta},
                      {"ord_log_q", b.tate->log_q.valuation().str()},
                      {"reason", "split multiplicative but ord_p(log_p q) != 1"}}));
    } else if (exactly_divides_N(b, P) &&
               b.local.at(P).reduction_class == ReductionClass::SplitMultiplicative && !b.tate) {
      out.push_back(ClauseVerdict::inconclusive("thm11.b", "no Tate period data at p"));
    } else {
      nlohmann::json ev{{"ord_p_delta", ordp_delta}};
      if (split) ev["ord_log_q"] = b.tate->log_q.valuation().str();
      out.push_back(ClauseVerdict::holds("thm11.b", ev));
    }
  }

  // (c) irreducibility of the mod-p representation
  out.push_back(irreducibility_clause("thm11.c", b.certificate));

  // (d) every ell || N with ell = +-1 mod p has p not dividing ord_ell(disc)
  {
    nlohmann::json checked = nlohmann::json::array();
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& [ell, data] : b.local) {
      if (data.conductor_exponent != 1 || ell == P) continue;
      if (!is_pm_one_mod_p(ell, b.p)) continue;
      nlohmann::json entry{{"ell", istr(ell)},
                           {"ell_mod_p", static_cast<long>(mpz_fdiv_ui(
                                             ell.get_mpz_t(), static_cast<unsigned long>(b.p)))},
                           {"ord_ell_delta", data.ord_delta_min}};
      checked.push_back(entry);
      if (data.ord_delta_min % b.p == 0) violations.push_back(entry);
    }
    if (violations.empty())
      out.push_back(ClauseVerdict::holds("thm11.d", {{"checked", checked}}));
    else
      out.push_back(ClauseVerdict::fails("thm11.d", {{"violations", violations}}));
  }

  // (e) at least two primes ell || N with p not dividing ord_ell(disc)
  {
    nlohmann::json qualifying = nlohmann::json::array();
    for (const auto& [ell, data] : b.local) {
      if (data.conductor_exponent != 1) continue;
      if (data.ord_delta_min % b.p != 0)
        qualifying.push_back({{"ell", istr(ell)}, {"ord_ell_delta", data.ord_delta_min}});
    }
    nlohmann::json ev{{"qualifying", qualifying}, {"count", qualifying.size()}};
    if (qualifying.size() >= 2)
      out.push_back(ClauseVerdict::holds("thm11.e", ev));
    else
      out.push_back(ClauseVerdict::fails("thm11.e", ev));
  }
  return out;
}

}  // namespace

std::vector<ClauseVerdict> check_spade(const InvariantBundle& b) {
  std::vector<ClauseVerdict> out;
  if (!b.factorization) {
    out.push_back(ClauseVerdict::fails("spade.1", {{"reason", "no permissible factorization"}}));
    out.push_back(ClauseVerdict::inconclusive("spade.2", "no permissible factorization"));
    out.push_back(ClauseVerdict::inconclusive("spade.3", "no permissible factorization"));
    return out;
  }
  const PermissibleFactorization& f = *b.factorization;
  const std::set<Int>& ram = b.certificate.ram_set;
  Int P(b.p);

  // (1) structural: N- squarefree and coprime to N+ (re-asserted)
  {
    Int g;
    mpz_gcd(g.get_mpz_t(), f.n_plus.get_mpz_t(), f.n_minus.get_mpz_t());
    bool ok = g == 1 && (f.n_minus == 1 || is_squarefree(f.n_minus));
    nlohmann::json ev{{"n_plus", istr(f.n_plus)}, {"n_minus", istr(f.n_minus)}, {"nu_minus", f.nu_minus}};
    out.push_back(ok ? ClauseVerdict::holds("spade.1", ev) : ClauseVerdict::fails("spade.1", ev));
  }

  // (2) Ram contains every ell != p with ell || N+ and every ell | N- with
  // ell = +-1 mod p
  {
    nlohmann::json required = nlohmann::json::array();
    nlohmann::json violations = nlohmann::json::array();
    for (const Int& ell : prime_list(f.n_plus)) {
      if (ell == P || !exactly_divides_N(b, ell)) continue;
      nlohmann::json entry{{"ell", istr(ell)}, {"why", "ell || N+"}};
      required.push_back(entry);
      if (ram.find(ell) == ram.end()) violations.push_back(entry);
    }
    for (const Int& ell : prime_list(f.n_minus)) {
      if (!is_pm_one_mod_p(ell, b.p)) continue;
      nlohmann::json entry{{"ell", istr(ell)},
                           {"ell_mod_p", static_cast<long>(mpz_fdiv_ui(
                                             ell.get_mpz_t(), static_cast<unsigned long>(b.p)))},
                           {"why", "ell | N- with ell = +-1 mod p"}};
      required.push_back(entry);
      if (ram.find(ell) == ram.end()) violations.push_back(entry);
    }
    nlohmann::json ev{{"required", required}, {"ram", prime_strings(ram)}};
    if (violations.empty())
      out.push_back(ClauseVerdict::holds("spade.2", ev));
    else {
      ev["violations"] = violations;
      out.push_back(ClauseVerdict::fails("spade.2", ev));
    }
  }

  // (3) Ram nonempty, and Ram meets N- or at least two primes ell || N+
  {
    bool ram_nonempty = !ram.empty();
    bool ram_meets_minus = false;
    for (const Int& ell : ram)
      if (mpz_divisible_p(f.n_minus.get_mpz_t(), ell.get_mpz_t())) ram_meets_minus = true;
    long count_plus = 0;
    nlohmann::json plus_primes = nlohmann::json::array();
    for (const Int& ell : prime_list(f.n_plus)) {
      if (!exactly_divides_N(b, ell)) continue;
      if (b.spade3_exclude_p && ell == P) continue;
      ++count_plus;
      plus_primes.push_back(istr(ell));
    }
    nlohmann::json ev{{"ram", prime_strings(ram)},
                      {"ram_meets_n_minus", ram_meets_minus},
                      {"primes_exactly_dividing_n_plus", plus_primes},
                      {"count_includes_p", !b.spade3_exclude_p}};
    bool ok = ram_nonempty && (ram_meets_minus || count_plus >= 2);
    out.push_back(ok ? ClauseVerdict::holds("spade.3", ev)
                     : ClauseVerdict::fails("spade.3", ev));
  }
  return out;
}

std::vector<ClauseVerdict> check_heart(const InvariantBundle& b) {
  std::vector<ClauseVerdict> out = check_spade(b);
  // rename to the heart ids; clauses (1)-(3) coincide with spade for curves
  for (size_t i = 0; i < out.size(); ++i)
    out[i].clause_id = "heart." + std::to_string(i + 1);
  out.push_back(ClauseVerdict::holds("heart.4", {{"p", b.p}, {"note", heart4_auto_note()}}));
  return out;
}

TheoremReport gate_thm_main(const InvariantBundle& b) {
  if (!b.coprime_DN)
    throw Error(errc::disc_not_coprime, "gcd(D, N) != 1");
  TheoremReport r;
  r.theorem_id = TheoremId::ThmEMain;

  // reduction precondition p || N
  Int P(b.p);
  if (exactly_divides_N(b, P))
    r.clauses.push_back(ClauseVerdict::holds("main.red", {{"p", b.p}, {"ord_p_N", 1}}));
  else
    r.clauses.push_back(
        ClauseVerdict::fails("main.red", {{"p", b.p}, {"reason", "p does not exactly divide N"}}));

  // (a) p >= 5 and p splits in K
  {
    nlohmann::json ev{{"p", b.p}, {"splitting", splitting_type_str(b.p_splitting)}};
    if (b.p >= 5 && b.p_splitting == SplittingType::Split)
      r.clauses.push_back(ClauseVerdict::holds("main.a", ev));
    else
      r.clauses.push_back(ClauseVerdict::fails("main.a", ev));
  }

  // (b) irreducibility
  r.clauses.push_back(irreducibility_clause("main.b", b.certificate));

  // (c) not finite at p; if split multiplicative, the L-invariant condition
  r.clauses.push_back(finiteness_clause("main.c", b));

  // (d) Hypothesis spade with nu(N-) even
  for (auto& c : check_spade(b)) r.clauses.push_back(std::move(c));
  if (b.factorization) {
    nlohmann::json ev{{"nu_minus", b.factorization->nu_minus}};
    if (b.factorization->nu_minus % 2 == 0)
      r.clauses.push_back(ClauseVerdict::holds("main.d.parity", ev));
    else
      r.clauses.push_back(ClauseVerdict::fails("main.d.parity", ev));
  } else {
    r.clauses.push_back(ClauseVerdict::inconclusive("main.d.parity", "no permissible factorization"));
  }

  r.verdict = fold(r.clauses);
  if (r.verdict == TheoremVerdict::Applies) {
    r.conclusions.push_back({"kappa_nonzero", "κ ≠ 0"});
    r.conclusions.push_back({"kappa_infinity_nonzero", "κ∞ ≠ 0"});
    r.conclusions.push_back({"M_infinity_zero", "ℳ∞(g) = 0"});
  }
  return r;
}

TheoremReport gate_thm_EQ(const InvariantBundle& b, const ExternalInputs& ext) {
  TheoremReport r;
  r.theorem_id = TheoremId::ThmEQ;
  r.clauses = thm11_a_to_e(b);
  if (!ext.selmer_corank) {
    r.clauses.push_back(ClauseVerdict::inconclusive("thm11.f", "selmer_corank not supplied"));
  } else {
    nlohmann::json ev{{"selmer_corank", *ext.selmer_corank}, {"source", "assumed, not computed"}};
    r.clauses.push_back(*ext.selmer_corank == 1 ? ClauseVerdict::holds("thm11.f", ev)
                                                : ClauseVerdict::fails("thm11.f", ev));
    r.external_inputs_used["selmer_corank"] = *ext.selmer_corank;
  }
  r.verdict = fold(r.clauses);
  if (r.verdict == TheoremVerdict::Applies) {
    r.conclusions.push_back({"rank_one", "rank(E/Q) = 1"});
    r.conclusions.push_back({"analytic_rank_one", "analytic rank of E/Q = 1"});
    r.conclusions.push_back({"sha_finite", "Sha(E/Q) is finite"});
  }
  return r;
}

TheoremReport gate_bsd(const InvariantBundle& b, const ExternalInputs& ext) {
  TheoremReport r;
  r.theorem_id = TheoremId::ThmEBSD;
  r.clauses = thm11_a_to_e(b);
  if (!ext.analytic_rank) {
    r.clauses.push_back(ClauseVerdict::inconclusive("thm12.rank", "analytic_rank not supplied"));
  } else {
    nlohmann::json ev{{"analytic_rank", *ext.analytic_rank}, {"source", "assumed, not computed"}};
    r.clauses.push_back(*ext.analytic_rank == 1 ? ClauseVerdict::holds("thm12.rank", ev)
                                                : ClauseVerdict::fails("thm12.rank", ev));
    r.external_inputs_used["analytic_rank"] = *ext.analytic_rank;
  }

  // Tamagawa valuation ord_p(prod c_ell) from the local table
  long tam_val = 0;
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& [ell, data] : b.local) {
    if (data.conductor_exponent == 0) continue;
    long v = 0;
    long c = data.tamagawa;
    while (c % b.p == 0) {
      c /= b.p;
      ++v;
    }
    tam_val += v;
    factors.push_back({{"ell", istr(ell)}, {"tamagawa", data.tamagawa}, {"ord_p", v}});
  }

  if (ext.lhs_valuation && ext.sha_valuation) {
    nlohmann::json ev{{"lhs_valuation", *ext.lhs_valuation},
                      {"sha_valuation", *ext.sha_valuation},
                      {"tamagawa_valuation", tam_val},
                      {"source", "assumed, not computed"}};
    r.external_inputs_used["lhs_valuation"] = *ext.lhs_valuation;
    r.external_inputs_used["sha_valuation"] = *ext.sha_valuation;
    r.clauses.push_back(*ext.lhs_valuation == *ext.sha_valuation + tam_val
                            ? ClauseVerdict::holds("thm12.consistency", ev)
                            : ClauseVerdict::fails("thm12.consistency", ev));
  }

  r.verdict = fold(r.clauses);
  if (r.verdict == TheoremVerdict::Applies) {
    r.conclusions.push_back(
        {"bsd_identity", "ord_p(L'(E,1)/(Ω_E·Reg(E/Q))) = ord_p(#Sha(E/Q)) + " +
                             std::to_string(tam_val)});
    r.conclusions.push_back(
        {"tamagawa_valuation", "ord_p(∏ c_ℓ) = " + std::to_string(tam_val)});
  }
  return r;
}

std::pair<TheoremReport, TheoremReport> gate_rank_and_parity(const InvariantBundle& b,
                                                             const TheoremReport& main_report,
                                                             const ExternalInputs& ext) {
  (void)b;
  auto inherited = [&](const std::string& id) {
    nlohmann::json ev{{"main_verdict", theorem_verdict_str(main_report.verdict)}};
    switch (main_report.verdict) {
      case TheoremVerdict::Applies: return ClauseVerdict::holds(id, ev);
      case TheoremVerdict::DoesNotApply: return ClauseVerdict::fails(id, ev);
      case TheoremVerdict::Inconclusive:
        return ClauseVerdict::inconclusive(id, "main nonvanishing gate is inconclusive");
    }
    return ClauseVerdict::inconclusive(id, "unreachable");
  };

  TheoremReport rank;
  rank.theorem_id = TheoremId::ThmERank;
  rank.clauses.push_back(inherited("rank.main"));
  if (!ext.r_plus || !ext.r_minus) {
    rank.clauses.push_back(
        ClauseVerdict::inconclusive("rank.inputs", "r_plus / r_minus not supplied"));
  } else {
    if (*ext.r_plus < 0 || *ext.r_minus < 0)
      throw Error(errc::negative_corank, "Selmer coranks must be nonnegative");
    nlohmann::json ev{{"r_plus", *ext.r_plus},
                      {"r_minus", *ext.r_minus},
                      {"source", "assumed, not computed"}};
    rank.clauses.push_back(ClauseVerdict::holds("rank.inputs", ev));
    rank.external_inputs_used["r_plus"] = *ext.r_plus;
    rank.external_inputs_used["r_minus"] = *ext.r_minus;
    long total = *ext.r_plus + *ext.r_minus;
    nlohmann::json pev{{"total_corank", total}};
    rank.clauses.push_back(total % 2 == 1
                               ? ClauseVerdict::holds("rank.parity_consistency", pev)
                               : ClauseVerdict::fails("rank.parity_consistency", pev));
  }
  rank.verdict = fold(rank.clauses);
  if (rank.verdict == TheoremVerdict::Applies) {
    long v = std::min(*ext.r_plus, *ext.r_minus) - 1;
    rank.conclusions.push_back(
        {"ord_kappa_infinity", "ord(κ∞) = min{r+, r-} - 1 = " + std::to_string(v)});
    rank.conclusions.push_back(
        {"total_corank_odd", "r+ + r- = " + std::to_string(*ext.r_plus + *ext.r_minus) +
                                 " is odd, as the parity theorem requires"});
  }

  TheoremReport parity;
  parity.theorem_id = TheoremId::Parity;
  parity.clauses.push_back(inherited("parity.main"));
  parity.verdict = fold(parity.clauses);
  if (parity.verdict == TheoremVerdict::Applies) {
    parity.conclusions.push_back({"sel_p_dim_odd", "dim_{F_p} Sel_p(E/K) is odd"});
    parity.conclusions.push_back(
        {"sel_pinf_corank_odd", "corank_{Z_p} Sel_{p∞}(E/K) is odd"});
  }
  return {rank, parity};
}

}  // namespace ecq
