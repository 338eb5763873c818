#include "ecq/tate_period.hpp"

#include <mutex>

namespace ecq {

namespace {

// power series over Z, little-endian, truncated products
std::vector<Int> series_mul(const std::vector<Int>& a, const std::vector<Int>& b, size_t count) {
  std::vector<Int> c(count, Int(0));
  for (size_t i = 0; i < a.size() && i < count; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j < count; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// inverse of a series with constant term 1
std::vector<Int> series_inverse(const std::vector<Int>& a, size_t count) {
  std::vector<Int> inv(count, Int(0));
  inv[0] = 1;
  for (size_t k = 1; k < count; ++k) {
    Int s = 0;
    for (size_t i = 1; i <= k && i < a.size(); ++i) s += a[i] * inv[k - i];
    inv[k] = -s;
  }
  return inv;
}

std::vector<Int> compute_j_coefficients(size_t count) {
  // E4 = 1 + 240 sum sigma_3(n) q^n
  std::vector<Int> e4(count, Int(0));
  e4[0] = 1;
  for (size_t n = 1; n < count; ++n) {
    Int s3 = 0;
    for (size_t d = 1; d <= n; ++d)
      if (n % d == 0) s3 += Int(static_cast<unsigned long>(d)) * d * d;
    e4[n] = 240 * s3;
  }
  // Delta/q = prod (1 - q^n)^24
  std::vector<Int> dq(count, Int(0));
  dq[0] = 1;
  for (size_t n = 1; n < count; ++n) {
    std::vector<Int> factor(count, Int(0));
    factor[0] = 1;
    if (n < count) factor[n] = -1;
    for (int e = 0; e < 24; ++e) dq = series_mul(dq, factor, count);
  }
  auto e4cube = series_mul(series_mul(e4, e4, count), e4, count);
  return series_mul(e4cube, series_inverse(dq, count), count);
}

std::mutex j_cache_mutex;
std::vector<Int> j_cache;

}  // namespace

std::vector<Int> j_series_coefficients(long count) {
  if (count < 1) throw Error(errc::bad_input, "coefficient count must be >= 1");
  std::lock_guard<std::mutex> lock(j_cache_mutex);
  if (static_cast<long>(j_cache.size()) < count)
    j_cache = compute_j_coefficients(static_cast<size_t>(count));
  return std::vector<Int>(j_cache.begin(), j_cache.begin() + count);
}

TatePeriodData compute_tate_period(const WeierstrassCurve& curve, long p, long abs_precision) {
  if (abs_precision < 3) throw Error(errc::bad_input, "abs_precision must be >= 3");
  Int P(p);
  if (!is_prime(P)) throw Error(errc::non_prime, "p = " + std::to_string(p) + " is not prime");
  long vdisc = valuation_exact(curve.disc, P);
  long vc4 = curve.c4 == 0 ? abs_precision + 1 : valuation_exact(curve.c4, P);
  if (!(vc4 == 0 && vdisc >= 1))
    throw Error(errc::not_multiplicative,
                "reduction at " + std::to_string(p) + " is not multiplicative");
  long n = vdisc;  // ord_p(q) = ord_p(disc_min) = -ord_p(j)

  LocalReductionData local = tate_algorithm(curve, P);
  bool split = local.reduction_class == ReductionClass::SplitMultiplicative;

  // Newton iteration on H(q) = u q - p^n G(q), where j = u / p^n and
  // G(q) = q j(q); all arithmetic in Z mod p^W.
  long W = abs_precision + 2 * n + 6;
  Int mod = power(P, static_cast<unsigned long>(W));
  long coeff_count = (W + n - 1) / n + 3;  // q^m contributes valuation >= m*n
  std::vector<Int> G = j_series_coefficients(coeff_count);

  Int c4cubed = curve.c4 * curve.c4 * curve.c4;
  Int disc_unit = curve.disc / power(P, static_cast<unsigned long>(n));
  Int u = mod_reduce(c4cubed * mod_inverse(mod_reduce(disc_unit, mod), mod), mod);
  Int pn = power(P, static_cast<unsigned long>(n));

  auto eval_G = [&](const Int& q) {
    Int acc = 0;
    for (size_t i = G.size(); i-- > 0;) acc = mod_reduce(acc * q + G[i], mod);
    return acc;
  };
  auto eval_Gprime = [&](const Int& q) {
    Int acc = 0;
    for (size_t i = G.size(); i-- > 1;) acc = mod_reduce(acc * q + Int(static_cast<long>(i)) * G[i], mod);
    return acc;
  };

  // seed q0 = 1/j; |j| > 1 p-adically so convergence is quadratic
  Int q0 = mod_reduce(power(P, static_cast<unsigned long>(n)) *
                          mod_reduce(disc_unit * mod_inverse(mod_reduce(c4cubed, mod), mod), mod),
                      mod);
  Int qk = q0;
  bool converged = false;
  for (int iter = 0; iter < 64; ++iter) {
    Int h = mod_reduce(u * qk - pn * eval_G(qk), mod);
    if (h == 0) {
      converged = true;
      break;
    }
    Int hp = mod_reduce(u - pn * eval_Gprime(qk), mod);
    qk = mod_reduce(qk - h * mod_inverse(hp, mod), mod);
  }
  if (!converged) throw Error(errc::precision_exhausted, "Newton iteration for q did not converge");
  if (valuation_exact(qk, P) != n)
    throw Error(errc::internal, "Tate period has the wrong valuation");

  TatePeriodData out{
      n,
      PadicNumber::from_integer(qk, p, abs_precision + n),
      PadicNumber::zero(p, 1),
      PadicNumber::zero(p, 1),
      n % p != 0,
      false,
      split,
  };
  out.log_q = padic_log_iwasawa(out.q);
  if (out.log_q.is_zero())
    throw Error(errc::precision_exhausted,
                "cannot certify ord_p(log_p q) at abs_precision " + std::to_string(abs_precision));
  out.hyp_L_holds = out.log_q.valuation() == Valuation(1);
  out.l_invariant = out.log_q.div_integer(Int(n));
  return out;
}

PadicNumber l_invariant(const TatePeriodData& data) {
  if (data.ord_q < 1) throw Error(errc::bad_input, "no multiplicative reduction data");
  if (data.log_q.is_zero()) throw Error(errc::precision_exhausted, "log q vanishes at working precision");
  return data.log_q.div_integer(Int(data.ord_q));
}

}  // namespace ecq
