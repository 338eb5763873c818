#include "ecq/padic.hpp"

#include <sstream>

namespace ecq {

namespace {

void check_prime(long p) {
  if (p < 2 || !is_prime(Int(p))) throw Error(errc::non_prime, "p = " + std::to_string(p) + " is not prime");
}

std::vector<uint32_t> digits_of(Int u, long p, long count) {
  std::vector<uint32_t> d(static_cast<size_t>(count), 0);
  for (long i = 0; i < count && u != 0; ++i) {
    d[static_cast<size_t>(i)] = static_cast<uint32_t>(mpz_fdiv_ui(u.get_mpz_t(), static_cast<unsigned long>(p)));
    u /= p;
  }
  return d;
}

}  // namespace

PadicNumber::PadicNumber(long p, long abs_precision)
    : prime_(p), valuation_(Valuation::infinity()), abs_precision_(abs_precision) {}

PadicNumber PadicNumber::zero(long p, long abs_precision) {
  check_prime(p);
  if (abs_precision < 1) throw Error(errc::bad_input, "abs_precision must be >= 1");
  return PadicNumber(p, abs_precision);
}

PadicNumber PadicNumber::make(long p, long v, const Int& unit, long abs_precision) {
  long rel = abs_precision - v;
  if (rel <= 0) return PadicNumber(p, abs_precision);
  Int u = mod_reduce(unit, power(Int(p), static_cast<unsigned long>(rel)));
  if (u == 0) return PadicNumber(p, abs_precision);
  long w = valuation_exact(u, Int(p));
  if (w > 0) {
    v += w;
    rel -= w;
    if (rel <= 0) return PadicNumber(p, abs_precision);
    u /= power(Int(p), static_cast<unsigned long>(w));
    u = mod_reduce(u, power(Int(p), static_cast<unsigned long>(rel)));
    if (u == 0) return PadicNumber(p, abs_precision);
  }
  PadicNumber x(p, abs_precision);
  x.valuation_ = Valuation(v);
  x.unit_digits_ = digits_of(u, p, rel);
  return x;
}

PadicNumber PadicNumber::from_integer(const Int& n, long p, long abs_precision) {
  return from_rational(n, 1, p, abs_precision);
}

PadicNumber PadicNumber::from_rational(const Int& num, const Int& den, long p, long abs_precision) {
  check_prime(p);
  if (abs_precision < 1) throw Error(errc::bad_input, "abs_precision must be >= 1");
  if (den == 0) throw Error(errc::zero_denominator, "zero denominator");
  if (num == 0) return zero(p, abs_precision);
  Int P(p);
  long vn = valuation_exact(num, P);
  long vd = valuation_exact(den, P);
  long v = vn - vd;
  long rel = abs_precision - v;
  if (rel <= 0) return zero(p, abs_precision);
  Int mod = power(P, static_cast<unsigned long>(rel));
  Int nu = num / power(P, static_cast<unsigned long>(vn));
  Int du = den / power(P, static_cast<unsigned long>(vd));
  Int u = mod_reduce(mod_reduce(nu, mod) * mod_inverse(mod_reduce(du, mod), mod), mod);
  return make(p, v, u, abs_precision);
}

long PadicNumber::relative_precision() const {
  return valuation_.is_infinite() ? 0 : abs_precision_ - valuation_.value();
}

Int PadicNumber::unit_part() const {
  Int u = 0;
  for (size_t i = unit_digits_.size(); i-- > 0;) u = u * prime_ + unit_digits_[i];
  return u;
}

Int PadicNumber::lift() const {
  if (is_zero()) return 0;
  long v = valuation_.value();
  if (v < 0) throw Error(errc::bad_input, "lift of negative-valuation value");
  return unit_part() * power(Int(prime_), static_cast<unsigned long>(v));
}

void PadicNumber::check_same_field(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime_ != b.prime_) throw Error(errc::prime_mismatch, "mixed-prime p-adic arithmetic");
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
  check_same_field(*this, o);
  long N = std::min(abs_precision_, o.abs_precision_);
  if (is_zero() && o.is_zero()) return zero(prime_, N);
  if (is_zero()) return o.truncated(N);
  if (o.is_zero()) return truncated(N);
  long va = valuation_.value(), vb = o.valuation_.value();
  long v = std::min(va, vb);
  long rel = N - v;
  if (rel <= 0) return zero(prime_, N);
  Int mod = power(Int(prime_), static_cast<unsigned long>(rel));
  Int s = unit_part() * power(Int(prime_), static_cast<unsigned long>(va - v)) +
          o.unit_part() * power(Int(prime_), static_cast<unsigned long>(vb - v));
  return make(prime_, v, mod_reduce(s, mod), N);
}

PadicNumber PadicNumber::operator-() const {
  if (is_zero()) return *this;
  long rel = relative_precision();
  Int mod = power(Int(prime_), static_cast<unsigned long>(rel));
  return make(prime_, valuation_.value(), mod - unit_part(), abs_precision_);
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
  check_same_field(*this, o);
  if (is_zero() || o.is_zero()) {
    // ord(xy) >= (bound on ord x) + (bound on ord y)
    auto bound = [](const PadicNumber& x) {
      return x.is_zero() ? x.abs_precision_ : x.valuation_.value();
    };
    return zero(prime_, bound(*this) + bound(o));
  }
  long v = valuation_.value() + o.valuation_.value();
  long rel = std::min(relative_precision(), o.relative_precision());
  Int mod = power(Int(prime_), static_cast<unsigned long>(rel));
  Int u = mod_reduce(unit_part() * o.unit_part(), mod);
  return make(prime_, v, u, v + rel);
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const {
  check_same_field(*this, o);
  if (o.is_zero()) throw Error(errc::divide_by_zero, "division by (indistinguishable from) zero");
  if (is_zero()) return zero(prime_, abs_precision_ - o.valuation_.value());
  long v = valuation_.value() - o.valuation_.value();
  long rel = std::min(relative_precision(), o.relative_precision());
  Int mod = power(Int(prime_), static_cast<unsigned long>(rel));
  Int u = mod_reduce(unit_part() * mod_inverse(mod_reduce(o.unit_part(), mod), mod), mod);
  return make(prime_, v, u, v + rel);
}

PadicNumber PadicNumber::mul_integer(const Int& m) const {
  if (m == 0) throw Error(errc::bad_input, "mul_integer(0)");
  if (is_zero()) {
    long shift = valuation_exact(m, Int(prime_));
    return zero(prime_, abs_precision_ + shift);
  }
  long shift = valuation_exact(m, Int(prime_));
  long rel = relative_precision();
  Int mod = power(Int(prime_), static_cast<unsigned long>(rel));
  Int mu = m / power(Int(prime_), static_cast<unsigned long>(shift));
  Int u = mod_reduce(unit_part() * mod_reduce(mu, mod), mod);
  long v = valuation_.value() + shift;
  return make(prime_, v, u, v + rel);
}

PadicNumber PadicNumber::div_integer(const Int& m) const {
  if (m == 0) throw Error(errc::divide_by_zero, "div_integer(0)");
  long shift = valuation_exact(m, Int(prime_));
  if (is_zero()) return zero(prime_, abs_precision_ - shift);
  long rel = relative_precision();
  Int mod = power(Int(prime_), static_cast<unsigned long>(rel));
  Int mu = m / power(Int(prime_), static_cast<unsigned long>(shift));
  Int u = mod_reduce(unit_part() * mod_inverse(mod_reduce(mu, mod), mod), mod);
  long v = valuation_.value() - shift;
  return make(prime_, v, u, v + rel);
}

PadicNumber PadicNumber::truncated(long abs_precision) const {
  if (abs_precision > abs_precision_)
    throw Error(errc::bad_input, "truncated() cannot raise precision");
  if (abs_precision < 1) throw Error(errc::bad_input, "abs_precision must be >= 1");
  if (is_zero()) return zero(prime_, abs_precision);
  return make(prime_, valuation_.value(), unit_part(), abs_precision);
}

bool PadicNumber::agrees_with(const PadicNumber& o) const {
  if (prime_ != o.prime_) return false;
  long N = std::min(abs_precision_, o.abs_precision_);
  PadicNumber d = (*this - o).truncated(N);
  return d.is_zero();
}

bool operator==(const PadicNumber& a, const PadicNumber& b) {
  return a.prime_ == b.prime_ && a.valuation_ == b.valuation_ &&
         a.abs_precision_ == b.abs_precision_ && a.unit_digits_ == b.unit_digits_;
}

std::string PadicNumber::str() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "O(" << prime_ << "^" << abs_precision_ << ")";
    return os.str();
  }
  long v = valuation_.value();
  if (v == 0)
    os << unit_part();
  else
    os << prime_ << "^" << v << " * " << unit_part();
  os << " + O(" << prime_ << "^" << abs_precision_ << ")";
  return os.str();
}

PadicNumber teichmuller_lift(long residue, long p, long abs_precision) {
  check_prime(p);
  Int mod = power(Int(p), static_cast<unsigned long>(abs_precision));
  Int w = mod_reduce(Int(residue), mod);
  if (mpz_divisible_ui_p(w.get_mpz_t(), static_cast<unsigned long>(p)))
    throw Error(errc::bad_input, "Teichmueller lift of a residue divisible by p");
  // x -> x^p gains one digit of agreement with the fixed point per step
  for (long i = 0; i <= abs_precision + 1; ++i) {
    Int next;
    mpz_powm_ui(next.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());
    if (next == w) break;
    w = next;
  }
  return PadicNumber::from_integer(w, p, abs_precision);
}

PadicNumber padic_log_iwasawa(const PadicNumber& x) {
  if (x.is_zero()) throw Error(errc::log_of_zero, "log of zero (at working precision)");
  long p = x.prime();
  long rel = x.relative_precision();
  Int P(p);
  Int mod = power(P, static_cast<unsigned long>(rel));

  // principal-unit part <x> = unit / teichmuller(unit)
  Int u = x.unit_part();
  Int w = u;
  for (long i = 0; i <= rel + 1; ++i) {
    Int next;
    mpz_powm_ui(next.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());
    if (next == w) break;
    w = next;
  }
  Int principal = mod_reduce(u * mod_inverse(w, mod), mod);
  Int z = principal - 1;  // valuation >= 1
  if (z == 0) return PadicNumber::zero(p, rel);

  // smallest K with K - floor(log_p K) >= rel: term k has valuation
  // >= k - ord_p(k) >= k - floor(log_p k)
  long K = [&] {
    long k = 1;
    while (true) {
      long lg = 0;
      Int pw = 1;
      while (pw * p <= k) {
        pw *= p;
        ++lg;
      }
      if (k - lg >= rel) return k;
      ++k;
    }
  }();
  // guard digits cover the exact divisions by p^ord_p(k)
  long guard = 0;
  {
    Int pw = 1;
    while (pw * p <= K) {
      pw *= p;
      ++guard;
    }
    ++guard;
  }
  Int work_mod = power(P, static_cast<unsigned long>(rel + guard));

  Int acc = 0;
  Int zk = 1;
  for (long k = 1; k <= K; ++k) {
    zk = mod_reduce(zk * z, work_mod);
    long e = (k % p == 0) ? valuation_exact(Int(k), P) : 0;
    Int term = zk / power(P, static_cast<unsigned long>(e));
    Int kunit = Int(k) / power(P, static_cast<unsigned long>(e));
    term = mod_reduce(term * mod_inverse(mod_reduce(kunit, mod), mod), mod);
    if (k % 2 == 0)
      acc -= term;
    else
      acc += term;
    acc = mod_reduce(acc, mod);
  }
  return acc == 0 ? PadicNumber::zero(p, rel) : PadicNumber::from_integer(acc, p, rel);
}

}  // namespace ecq
