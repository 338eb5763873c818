#pragma once

// Integral Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// with the standard derived quantities b2..b8, c4, c6 and discriminant.

#include <array>
#include <string>

#include "ecq/integers.hpp"

namespace ecq {

struct WeierstrassCurve {
  Int a1, a2, a3, a4, a6;
  Int b2, b4, b6, b8, c4, c6, disc;

  WeierstrassCurve(Int a1_, Int a2_, Int a3_, Int a4_, Int a6_);
  static WeierstrassCurve from_array(const std::array<Int, 5>& a);

  // Admissible change of variables x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
  // All divisions by powers of u must be exact (checked).
  WeierstrassCurve transformed(const Int& r, const Int& s, const Int& t, const Int& u) const;

  Int j_numerator() const { return c4 * c4 * c4; }  // j = c4^3 / disc

  std::string str() const;

  friend bool operator==(const WeierstrassCurve& x, const WeierstrassCurve& y) {
    return x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3 && x.a4 == y.a4 && x.a6 == y.a6;
  }
};

}  // namespace ecq
