#include "ecq/weierstrass.hpp"

#include <sstream>

namespace ecq {

WeierstrassCurve::WeierstrassCurve(Int a1_, Int a2_, Int a3_, Int a4_, Int a6_)
    : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_)) {
  b2 = a1 * a1 + 4 * a2;
  b4 = 2 * a4 + a1 * a3;
  b6 = a3 * a3 + 4 * a6;
  b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  c4 = b2 * b2 - 24 * b4;
  c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (disc == 0) throw Error(errc::invalid_curve, "singular model: discriminant is zero");
  if (4 * b8 != b2 * b6 - b4 * b4 || 1728 * disc != c4 * c4 * c4 - c6 * c6)
    throw Error(errc::internal, "b/c invariant relations violated");
}

WeierstrassCurve WeierstrassCurve::from_array(const std::array<Int, 5>& a) {
  return WeierstrassCurve(a[0], a[1], a[2], a[3], a[4]);
}

WeierstrassCurve WeierstrassCurve::transformed(const Int& r, const Int& s, const Int& t, const Int& u) const {
  if (u == 0) throw Error(errc::bad_input, "transform with u = 0");
  Int u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  Int n1 = a1 + 2 * s;
  Int n2 = a2 - s * a1 + 3 * r - s * s;
  Int n3 = a3 + r * a1 + 2 * t;
  Int n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
  Int n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
  if (!mpz_divisible_p(n1.get_mpz_t(), u.get_mpz_t()) ||
      !mpz_divisible_p(n2.get_mpz_t(), u2.get_mpz_t()) ||
      !mpz_divisible_p(n3.get_mpz_t(), u3.get_mpz_t()) ||
      !mpz_divisible_p(n4.get_mpz_t(), u4.get_mpz_t()) ||
      !mpz_divisible_p(n6.get_mpz_t(), u6.get_mpz_t()))
    throw Error(errc::bad_input, "non-integral change of variables");
  return WeierstrassCurve(n1 / u, n2 / u2, n3 / u3, n4 / u4, n6 / u6);
}

std::string WeierstrassCurve::str() const {
  std::ostringstream os;
  os << "[" << a1 << "," << a2 << "," << a3 << "," << a4 << "," << a6 << "]";
  return os.str();
}

}  // namespace ecq
