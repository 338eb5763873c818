#include "ecq/tate.hpp"

#include <vector>

namespace ecq {

std::string reduction_class_str(ReductionClass c) {
  switch (c) {
    case ReductionClass::Good: return "Good";
    case ReductionClass::SplitMultiplicative: return "SplitMultiplicative";
    case ReductionClass::NonsplitMultiplicative: return "NonsplitMultiplicative";
    case ReductionClass::Additive: return "Additive";
  }
  return "?";
}

std::string KodairaType::str() const {
  switch (family) {
    case Family::I: return "I" + std::to_string(index);
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::IStar: return "I" + std::to_string(index) + "*";
    case Family::IIStar: return "II*";
    case Family::IIIStar: return "III*";
    case Family::IVStar: return "IV*";
  }
  return "?";
}

namespace {

bool divides_pow(const Int& n, const Int& P, long k) {
  if (n == 0) return true;
  return valuation_exact(n, P) >= k;
}

Int exact_div_pow(const Int& n, const Int& P, long k) {
  Int q = power(P, static_cast<unsigned long>(k));
  if (!mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t()))
    throw Error(errc::internal, "inexact division in Tate step");
  return n / q;
}

// roots of A T^2 + B T + C over F_P, A a unit mod P
bool quadratic_has_root(const Int& A, const Int& B, const Int& C, const Int& P) {
  if (P < 64) {
    long p = static_cast<long>(P.get_si());
    long a = static_cast<long>(mpz_fdiv_ui(A.get_mpz_t(), p));
    long b = static_cast<long>(mpz_fdiv_ui(B.get_mpz_t(), p));
    long c = static_cast<long>(mpz_fdiv_ui(C.get_mpz_t(), p));
    for (long t = 0; t < p; ++t)
      if (((a * t + b) * t + c) % p == 0) return true;
    return false;
  }
  Int disc = B * B - 4 * A * C;
  return kronecker_symbol(disc, P) >= 0;
}

bool quadratic_separable(const Int& A, const Int& B, const Int& C, const Int& P) {
  if (P == 2) return !divides_pow(B, P, 1);
  Int disc = B * B - 4 * A * C;
  return !divides_pow(disc, P, 1);
}

// double root of A T^2 + B T + C mod P (caller established inseparability)
Int quadratic_double_root(const Int& A, const Int& B, const Int& C, const Int& P) {
  if (P < 64) {
    long p = static_cast<long>(P.get_si());
    long a = static_cast<long>(mpz_fdiv_ui(A.get_mpz_t(), p));
    long b = static_cast<long>(mpz_fdiv_ui(B.get_mpz_t(), p));
    long c = static_cast<long>(mpz_fdiv_ui(C.get_mpz_t(), p));
    for (long t = 0; t < p; ++t)
      if (((a * t + b) * t + c) % p == 0 && (2 * a * t + b) % p == 0) return Int(t);
    throw Error(errc::internal, "quadratic lacks the expected double root");
  }
  return mod_reduce(-B * mod_inverse(mod_reduce(2 * A, P), P), P);
}

// --- tiny dense polynomial arithmetic over F_P (degrees <= 5) ---

using Poly = std::vector<Int>;  // little-endian coefficients, reduced mod P

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_rem(Poly a, const Poly& f, const Int& P) {
  // f monic
  while (a.size() >= f.size()) {
    Int lead = a.back();
    size_t shift = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i)
      a[shift + i] = mod_reduce(a[shift + i] - lead * f[i], P);
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, const Int& P) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = mod_reduce(c[i + j] + a[i] * b[j], P);
  return poly_rem(poly_trim(std::move(c)), f, P);
}

Poly poly_powmod_x(const Int& e, const Poly& f, const Int& P) {
  // x^e mod f
  Poly result{Int(1)};
  Poly base{Int(0), Int(1)};
  Int exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) result = poly_mul_mod(result, base, f, P);
    base = poly_mul_mod(base, base, f, P);
    exp /= 2;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, const Int& P) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // make b monic
    Int inv = mod_inverse(b.back(), P);
    for (auto& c : b) c = mod_reduce(c * inv, P);
    Poly r = poly_rem(a, b, P);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// number of distinct roots in F_P of the separable cubic T^3 + b T^2 + c T + d
long cubic_root_count(const Int& b, const Int& c, const Int& d, const Int& P) {
  if (P < 64) {
    long p = static_cast<long>(P.get_si());
    long bb = static_cast<long>(mpz_fdiv_ui(b.get_mpz_t(), p));
    long cc = static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), p));
    long dd = static_cast<long>(mpz_fdiv_ui(d.get_mpz_t(), p));
    long count = 0;
    for (long t = 0; t < p; ++t)
      if ((((t + bb) * t + cc) * t + dd) % p == 0) ++count;
    return count;
  }
  Poly f{mod_reduce(d, P), mod_reduce(c, P), mod_reduce(b, P), Int(1)};
  Poly xp = poly_powmod_x(P, f, P);
  // x^P - x mod f
  if (xp.size() < 2) xp.resize(2, Int(0));
  xp[1] = mod_reduce(xp[1] - 1, P);
  Poly g = poly_gcd(f, poly_trim(std::move(xp)), P);
  return g.empty() ? 0 : static_cast<long>(g.size()) - 1;
}

// singular point of the reduction mod P, by scan (small P only)
std::pair<Int, Int> singular_point_by_scan(const WeierstrassCurve& C, const Int& P) {
  long p = static_cast<long>(P.get_si());
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) {
      Int X(x), Y(y);
      Int F = Y * Y + C.a1 * X * Y + C.a3 * Y - (X * X * X + C.a2 * X * X + C.a4 * X + C.a6);
      Int Fx = C.a1 * Y - (3 * X * X + 2 * C.a2 * X + C.a4);
      Int Fy = 2 * Y + C.a1 * X + C.a3;
      if (divides_pow(F, P, 1) && divides_pow(Fx, P, 1) && divides_pow(Fy, P, 1))
        return {X, Y};
    }
  throw Error(errc::internal, "no rational singular point on a singular reduction");
}

struct TateOutcome {
  LocalReductionData data;
  WeierstrassCurve minimal;
};

// One unified implementation: Tate's algorithm with the classical
// non-minimality restart, which doubles as the minimalization routine.
TateOutcome run_tate(WeierstrassCurve C, const Int& P) {
  if (P < 2 || !is_prime(P)) throw Error(errc::non_prime, "ell = " + P.get_str() + " is not prime");
  long u_val = 0;

  for (;;) {
    long n = (valuation_exact(C.disc, P));
    if (n == 0) {
      LocalReductionData d;
      d.prime = P;
      d.kodaira = {KodairaType::Family::I, 0};
      d.reduction_class = ReductionClass::Good;
      d.tamagawa = 1;
      d.ord_delta_min = 0;
      d.conductor_exponent = 0;
      d.scaling_valuation = u_val;
      return {d, C};
    }

    // move the singular point of the reduction to (0, 0)
    Int r, t;
    if (P <= 3) {
      auto [x0, y0] = singular_point_by_scan(C, P);
      r = x0;
      t = y0;
    } else {
      Int inv12 = mod_inverse(Int(12), P);
      if (divides_pow(C.c4, P, 1))
        r = mod_reduce(-C.b2 * inv12, P);  // cusp: triple root of the completed cubic
      else
        r = mod_reduce((18 * C.b6 - C.b2 * C.b4) * mod_inverse(C.c4, P), P);
      t = mod_reduce(-(C.a1 * r + C.a3) * mod_inverse(Int(2), P), P);
    }
    C = C.transformed(r, 0, t, 1);
    if (!divides_pow(C.a3, P, 1) || !divides_pow(C.a4, P, 1) || !divides_pow(C.a6, P, 1))
      throw Error(errc::internal, "singular point translation failed");

    if (!divides_pow(C.c4, P, 1)) {
      // multiplicative: tangent directions at the node solve T^2 + a1 T - a2
      bool split = quadratic_has_root(Int(1), C.a1, -C.a2, P);
      LocalReductionData d;
      d.prime = P;
      d.kodaira = {KodairaType::Family::I, n};
      d.reduction_class = split ? ReductionClass::SplitMultiplicative
                                : ReductionClass::NonsplitMultiplicative;
      d.tamagawa = split ? n : (n % 2 == 0 ? 2 : 1);
      d.ord_delta_min = n;
      d.conductor_exponent = 1;
      d.scaling_valuation = u_val;
      return {d, C};
    }

    // additive reduction
    auto finish = [&](KodairaType kt, ReductionClass rc, long c, long f) {
      LocalReductionData d;
      d.prime = P;
      d.kodaira = kt;
      d.reduction_class = rc;
      d.tamagawa = c;
      d.ord_delta_min = n;
      d.conductor_exponent = f;
      d.scaling_valuation = u_val;
      return TateOutcome{d, C};
    };

    if (!divides_pow(C.a6, P, 2))
      return finish({KodairaType::Family::II, 0}, ReductionClass::Additive, 1, n);
    if (!divides_pow(C.b8, P, 3))
      return finish({KodairaType::Family::III, 0}, ReductionClass::Additive, 2, n - 1);
    if (!divides_pow(C.b6, P, 3)) {
      Int a3t = exact_div_pow(C.a3, P, 1);
      Int a6t = exact_div_pow(C.a6, P, 2);
      long c = quadratic_has_root(Int(1), a3t, -a6t, P) ? 3 : 1;
      return finish({KodairaType::Family::IV, 0}, ReductionClass::Additive, c, n - 2);
    }

    // normalize to P | a1, a2; P^2 | a3, a4; P^3 | a6
    {
      bool done = false;
      if (P <= 3) {
        long p = static_cast<long>(P.get_si());
        for (long s = 0; s < p && !done; ++s)
          for (long tt = 0; tt < p * p && !done; ++tt) {
            WeierstrassCurve trial = C.transformed(0, s, tt, 1);
            if (divides_pow(trial.a1, P, 1) && divides_pow(trial.a2, P, 1) &&
                divides_pow(trial.a3, P, 2) && divides_pow(trial.a4, P, 2) &&
                divides_pow(trial.a6, P, 3)) {
              C = trial;
              done = true;
            }
          }
      } else {
        Int inv2 = mod_inverse(Int(2), P);
        Int s = mod_reduce(-C.a1 * inv2, P);
        Int P2 = P * P;
        Int t2 = mod_reduce(-C.a3 * mod_inverse(Int(2), P2), P2);
        C = C.transformed(0, s, t2, 1);
        done = divides_pow(C.a1, P, 1) && divides_pow(C.a2, P, 1) && divides_pow(C.a3, P, 2) &&
               divides_pow(C.a4, P, 2) && divides_pow(C.a6, P, 3);
      }
      if (!done) throw Error(errc::internal, "step-6 normalization failed");
    }

    // cubic T^3 + b T^2 + c T + d from (a2/P, a4/P^2, a6/P^3)
    Int b = exact_div_pow(C.a2, P, 1);
    Int c = exact_div_pow(C.a4, P, 2);
    Int d = exact_div_pow(C.a6, P, 3);
    Int w = 27 * d * d - b * b * c * c + 4 * b * b * b * d - 18 * b * c * d + 4 * c * c * c;
    Int xq = 3 * c - b * b;

    if (!divides_pow(w, P, 1)) {
      long roots = cubic_root_count(b, c, d, P);
      return finish({KodairaType::Family::IStar, 0}, ReductionClass::Additive, 1 + roots, n - 4);
    }

    if (!divides_pow(xq, P, 1)) {
      // I_m* (m >= 1): translate the double root of the cubic to T = 0
      Int r0;
      if (P <= 3) {
        bool found = false;
        long p = static_cast<long>(P.get_si());
        for (long cand = 0; cand < p && !found; ++cand) {
          WeierstrassCurve trial = C.transformed(P * cand, 0, 0, 1);
          if (valuation_exact(trial.a2, P) == 1 && divides_pow(trial.a4, P, 3) &&
              divides_pow(trial.a6, P, 4)) {
            C = trial;
            found = true;
          }
        }
        if (!found) throw Error(errc::internal, "double-root translation failed");
      } else {
        r0 = mod_reduce((b * c - 9 * d) * mod_inverse(mod_reduce(2 * xq, P), P), P);
        C = C.transformed(P * r0, 0, 0, 1);
        if (!(valuation_exact(C.a2, P) == 1 && divides_pow(C.a4, P, 3) &&
              divides_pow(C.a6, P, 4)))
          throw Error(errc::internal, "double-root translation failed");
      }

      long ex = 2, ey = 2;
      for (;;) {
        Int a2t = exact_div_pow(C.a2, P, 1);
        Int a3t = exact_div_pow(C.a3, P, ey);
        Int a6t = exact_div_pow(C.a6, P, ex + ey);
        if (quadratic_separable(Int(1), a3t, -a6t, P)) {
          long m = ex + ey - 3;
          long cc = quadratic_has_root(Int(1), a3t, -a6t, P) ? 4 : 2;
          return finish({KodairaType::Family::IStar, m}, ReductionClass::Additive, cc, n - m - 4);
        }
        Int y0 = quadratic_double_root(Int(1), a3t, -a6t, P);
        C = C.transformed(0, 0, power(P, static_cast<unsigned long>(ey)) * y0, 1);
        ++ey;

        a2t = exact_div_pow(C.a2, P, 1);
        Int a4t = exact_div_pow(C.a4, P, ex + 1);
        a6t = exact_div_pow(C.a6, P, ex + ey);
        if (quadratic_separable(a2t, a4t, a6t, P)) {
          long m = ex + ey - 3;
          long cc = quadratic_has_root(a2t, a4t, a6t, P) ? 4 : 2;
          return finish({KodairaType::Family::IStar, m}, ReductionClass::Additive, cc, n - m - 4);
        }
        Int x0 = quadratic_double_root(a2t, a4t, a6t, P);
        C = C.transformed(power(P, static_cast<unsigned long>(ex)) * x0, 0, 0, 1);
        ++ex;
        if (ex + ey - 3 > n) throw Error(errc::internal, "I_m* loop failed to terminate");
      }
    }

    // triple root: translate it to T = 0
    {
      bool found = false;
      if (P <= 3) {
        long p = static_cast<long>(P.get_si());
        for (long cand = 0; cand < p && !found; ++cand) {
          WeierstrassCurve trial = C.transformed(P * cand, 0, 0, 1);
          if (divides_pow(trial.a2, P, 2) && divides_pow(trial.a4, P, 3) &&
              divides_pow(trial.a6, P, 4)) {
            C = trial;
            found = true;
          }
        }
      } else {
        Int r0 = mod_reduce(-b * mod_inverse(Int(3), P), P);
        C = C.transformed(P * r0, 0, 0, 1);
        found = divides_pow(C.a2, P, 2) && divides_pow(C.a4, P, 3) && divides_pow(C.a6, P, 4);
      }
      if (!found) throw Error(errc::internal, "triple-root translation failed");
    }

    {
      Int a3t = exact_div_pow(C.a3, P, 2);
      Int a6t = exact_div_pow(C.a6, P, 4);
      if (quadratic_separable(Int(1), a3t, -a6t, P)) {
        long c3 = quadratic_has_root(Int(1), a3t, -a6t, P) ? 3 : 1;
        return finish({KodairaType::Family::IVStar, 0}, ReductionClass::Additive, c3, n - 6);
      }
      Int y0 = quadratic_double_root(Int(1), a3t, -a6t, P);
      C = C.transformed(0, 0, P * P * y0, 1);
    }

    if (!divides_pow(C.a4, P, 4))
      return finish({KodairaType::Family::IIIStar, 0}, ReductionClass::Additive, 2, n - 7);
    if (!divides_pow(C.a6, P, 6))
      return finish({KodairaType::Family::IIStar, 0}, ReductionClass::Additive, 1, n - 8);

    // not minimal at P: rescale and start over
    C = C.transformed(0, 0, 0, P);
    ++u_val;
  }
}

}  // namespace

std::pair<WeierstrassCurve, long> local_minimal_model(const WeierstrassCurve& curve, const Int& ell) {
  TateOutcome out = run_tate(curve, ell);
  return {out.minimal, out.data.scaling_valuation};
}

LocalReductionData tate_algorithm(const WeierstrassCurve& curve, const Int& ell) {
  TateOutcome out = run_tate(curve, ell);
  out.data.minimality_warning = out.data.scaling_valuation > 0;
  return out.data;
}

long trace_of_frobenius(const WeierstrassCurve& curve, const Int& ell, long point_count_budget) {
  if (!is_prime(ell)) throw Error(errc::non_prime, "ell = " + ell.get_str() + " is not prime");
  if (valuation_exact(curve.disc, ell) > 0) {
    LocalReductionData d = tate_algorithm(curve, ell);
    switch (d.reduction_class) {
      case ReductionClass::SplitMultiplicative: return 1;
      case ReductionClass::NonsplitMultiplicative: return -1;
      case ReductionClass::Additive: return 0;
      case ReductionClass::Good: break;  // input was non-minimal; fall through and count
    }
  }
  if (ell > point_count_budget)
    throw Error(errc::point_count_budget,
                "point counting budget exceeded at ell = " + ell.get_str());
  long p = static_cast<long>(ell.get_si());
  if (p == 2) {
    long a1 = static_cast<long>(mpz_fdiv_ui(curve.a1.get_mpz_t(), 2));
    long a2 = static_cast<long>(mpz_fdiv_ui(curve.a2.get_mpz_t(), 2));
    long a3 = static_cast<long>(mpz_fdiv_ui(curve.a3.get_mpz_t(), 2));
    long a4 = static_cast<long>(mpz_fdiv_ui(curve.a4.get_mpz_t(), 2));
    long a6 = static_cast<long>(mpz_fdiv_ui(curve.a6.get_mpz_t(), 2));
    long count = 1;
    for (long x = 0; x < 2; ++x)
      for (long y = 0; y < 2; ++y)
        if ((y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6)) % 2 == 0)
          ++count;
    return 3 - count;
  }
  // odd ell: #affine = sum_x (1 + chi(4x^3 + b2 x^2 + 2 b4 x + b6))
  std::vector<signed char> chi(static_cast<size_t>(p), -1);
  chi[0] = 0;
  for (long v = 1; v <= (p - 1) / 2; ++v) chi[static_cast<size_t>((v * v) % p)] = 1;
  long b2 = static_cast<long>(mpz_fdiv_ui(curve.b2.get_mpz_t(), static_cast<unsigned long>(p)));
  long b4 = static_cast<long>(mpz_fdiv_ui(curve.b4.get_mpz_t(), static_cast<unsigned long>(p)));
  long b6 = static_cast<long>(mpz_fdiv_ui(curve.b6.get_mpz_t(), static_cast<unsigned long>(p)));
  long sum = 0;
  for (long x = 0; x < p; ++x) {
    long f = (4 * x + b2) % p;
    f = (f * x + 2 * b4) % p;
    f = (f * x + b6) % p;
    sum += chi[static_cast<size_t>(f)];
  }
  return -sum;  // a = ell + 1 - (ell + 1 + sum)
}

CurveGlobalData conductor_and_global_data(const WeierstrassCurve& curve) {
  CurveGlobalData g{curve, curve, 1, 1, {}};
  std::vector<PrimePower> bad = factorize(curve.disc);
  std::map<Int, long> scalings;
  for (const auto& pp : bad) {
    auto [minimized, uv] = local_minimal_model(g.minimal_model, pp.prime);
    g.minimal_model = minimized;
    scalings[pp.prime] = uv;
  }
  g.minimal_discriminant = g.minimal_model.disc;
  if (g.minimal_discriminant == 1 || g.minimal_discriminant == -1)
    throw Error(errc::everywhere_good,
                "trivial minimal discriminant: no elliptic curve over Q has everywhere good reduction");
  g.conductor = 1;
  for (const auto& pp : bad) {
    LocalReductionData d = tate_algorithm(g.minimal_model, pp.prime);
    d.scaling_valuation = scalings[pp.prime];
    d.minimality_warning = false;
    g.conductor *= power(pp.prime, static_cast<unsigned long>(d.conductor_exponent));
    g.local.emplace(pp.prime, d);
  }
  return g;
}

}  // namespace ecq
