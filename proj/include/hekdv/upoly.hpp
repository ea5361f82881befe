#pragma once

#include <utility>
#include <vector>

#include "hekdv/mpoly.hpp"

namespace hekdv {

/// Dense univariate polynomial over Q: c[k] is the coefficient of x^k.
/// Kept trimmed (no trailing zeros); the zero polynomial is empty.
using UPoly = std::vector<Rat>;

namespace upoly {

UPoly trim(UPoly p);
int degree(const UPoly& p);  // -1 for zero
const Rat& leading(const UPoly& p);

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Rat& c);
UPoly derivative(const UPoly& a);
/// Quotient and remainder; throws MalformedInput for a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& a);
UPoly gcd(const UPoly& a, const UPoly& b);

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct ExtGcd {
  UPoly g, s, t;
};
ExtGcd ext_gcd(const UPoly& a, const UPoly& b);

/// Resultant via the Euclidean remainder sequence.
Rat resultant(const UPoly& a, const UPoly& b);

UPoly from_mpoly(const MPoly& p, Var v);
MPoly to_mpoly(const UPoly& p, Var v);

}  // namespace upoly

}  // namespace hekdv
