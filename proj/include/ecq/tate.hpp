#pragma once

// Local reduction data for elliptic curves over Q: local minimal models,
// Tate's algorithm (Kodaira type, Tamagawa number, conductor exponent),
// Frobenius traces by exact point counting, and global conductor assembly.

#include <map>
#include <string>
#include <utility>

#include "ecq/weierstrass.hpp"

namespace ecq {

enum class ReductionClass { Good, SplitMultiplicative, NonsplitMultiplicative, Additive };

std::string reduction_class_str(ReductionClass c);

struct KodairaType {
  enum class Family { I, II, III, IV, IStar, IIStar, IIIStar, IVStar };
  Family family = Family::I;
  long index = 0;  // k in I_k / I_k*

  std::string str() const;
  friend bool operator==(const KodairaType& a, const KodairaType& b) {
    return a.family == b.family && a.index == b.index;
  }
};

struct LocalReductionData {
  Int prime;
  KodairaType kodaira;
  ReductionClass reduction_class = ReductionClass::Good;
  long tamagawa = 1;
  long ord_delta_min = 0;
  long conductor_exponent = 0;
  long scaling_valuation = 0;      // u-exponent used by minimalization
  bool minimality_warning = false; // set when a non-minimal model was handed in
};

// ell-minimal model: no u = ell rescaling (with admissible translations)
// lowers ord_ell(disc). Returns the model and the scaling valuation applied.
std::pair<WeierstrassCurve, long> local_minimal_model(const WeierstrassCurve& curve, const Int& ell);

// Full local classification at ell. The input should be ell-minimal; a
// non-minimal input is re-minimalized internally and flagged.
LocalReductionData tate_algorithm(const WeierstrassCurve& curve, const Int& ell);

// a(ell): good reduction -> ell + 1 - #E(F_ell) by exhaustive point counting
// (budgeted), split/nonsplit multiplicative -> +1/-1, additive -> 0.
long trace_of_frobenius(const WeierstrassCurve& ell_minimal, const Int& ell,
                        long point_count_budget = 1000000);

struct CurveGlobalData {
  WeierstrassCurve input_model;
  WeierstrassCurve minimal_model;  // minimal at every prime
  Int conductor = 1;
  Int minimal_discriminant = 1;
  // keyed by every prime dividing the input discriminant (entries with good
  // reduction appear when the input model was non-minimal there)
  std::map<Int, LocalReductionData> local;
};

// Factors the discriminant, minimalizes at each bad prime, classifies, and
// assembles N = prod ell^f_ell. Rejects |disc_min| = 1 (no elliptic curve
// over Q has everywhere good reduction).
CurveGlobalData conductor_and_global_data(const WeierstrassCurve& curve);

}  // namespace ecq
