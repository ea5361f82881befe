#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "hekdv/algnum.hpp"
#include "hekdv/pseries.hpp"
#include "hekdv/ratfn.hpp"
#include "hekdv/report.hpp"
#include "hekdv/verify_bm.hpp"

namespace hekdv {

/// w1, w3, w5 for index 1, 3, 5.
Var w_var(int index);

/// Schur-Weierstrass polynomial of genus g in w1, ..., w_{2g-1} with its
/// first and second partials.
struct SigmaRat {
  int genus = 0;
  MPoly sigma;
  /// sigma_i = d sigma / d w_i for odd i <= 2g-1.
  const MPoly& partial(int i) const;
  /// sigma_ij.
  const MPoly& partial(int i, int j) const;

  std::array<MPoly, 3> first;
  std::array<std::array<MPoly, 3>, 3> second;
};

/// Throws IncompatibleGenus unless g is 1, 2 or 3.
SigmaRat sigma_rational(int g);

/// xi(w1, w3) with sigma(w1, w3, xi) = 0.
RatFn xi_closed_form();

struct UVPair {
  RatFn U, V;
};

/// U = -2 sigma3/sigma1 and V = -2 sigma5/sigma1 along the divisor, in (x, t).
UVPair uv_closed_form();
/// 6x(x^3+6t)/(x^3-3t)^2 and -18x^2/(x^3-3t)^2.
UVPair printed_uv();

/// Sigma displays, xi on the divisor, and U, V against `printed`.
VerifyReport verify_sigma_limit(const UVPair& printed);
VerifyReport verify_sigma_limit();

/// U''' + a1 U-dot + a2 U U' = 0, U-dot'' + b1 U U-dot + b2 U' V = 0,
/// U-dot = c1 V'; prime is d/dx, dot is d/dt.
struct RationalKdVCoefficients {
  Rat a1 = -4, a2 = -6;
  Rat b1 = -4, b2 = -2;
  Rat c1 = 1;
};

VerifyReport verify_rational_kdv(const RationalKdVCoefficients& k);
VerifyReport verify_rational_kdv();

/// D = 2(sigma1^2 - sigma11 sigma)/sigma^2 and E = 2(sigma1 sigma3 - sigma13 sigma)/sigma^2
/// from the genus-2 polynomial, in (x, t).
UVPair genus2_DE();

/// D = U, E = V against `printed`, and the hierarchy for (D, E).
VerifyReport verify_genus2_limit(const UVPair& printed);
VerifyReport verify_genus2_limit();

/// Polynomial of degree < 6 in phi over Q(w3, w5), modulo the monic sextic
/// phi^6 - 15 phi^3 w3 - 45 w3^2 + 45 phi w5.
class PhiRingElem {
 public:
  PhiRingElem() = default;
  /// Reduces a coefficient list (coefficient of phi^k at position k).
  explicit PhiRingElem(std::vector<RatFn> coefficients);

  static const MPoly& modulus();

  const std::array<RatFn, 6>& coefficients() const { return c_; }
  bool is_zero() const;
  RatFn to_ratfn() const;

  friend PhiRingElem operator+(const PhiRingElem& lhs, const PhiRingElem& rhs);
  friend PhiRingElem operator-(const PhiRingElem& lhs, const PhiRingElem& rhs);
  friend PhiRingElem operator*(const PhiRingElem& lhs, const PhiRingElem& rhs);
  friend bool operator==(const PhiRingElem& lhs, const PhiRingElem& rhs);

 private:
  std::array<RatFn, 6> c_;
};

/// Canonical remainder of a polynomial in phi (other symbols are coefficients).
PhiRingElem phi_reduce(const MPoly& p);
PhiRingElem phi_reduce(const std::vector<RatFn>& coefficients);

/// F_i (i in {2, 4, 5, 7}) from the sigma-derivative definitions with
/// w1 = phi, as a reduced numerator / denominator pair.
std::pair<PhiRingElem, PhiRingElem> appendix_F(int i);
/// The same, unreduced, as a rational function of phi, w3, w5.
RatFn appendix_F_ratfn(int i);

/// Printed numerators N_i and denominators K_i, i = 2, 4, 5, 7 in that order.
struct AppendixForms {
  std::array<RatFn, 4> numerators;
  std::array<RatFn, 4> denominators;
};
AppendixForms printed_appendix_forms();

VerifyReport verify_appendix_F(const AppendixForms& printed);
VerifyReport verify_appendix_F();

/// Systems (I) and (II) with y = 0 for G_i = F_i(phi(t, tau), t, tau), where
/// t = w3 and tau = w5, modulo the sextic.
VerifyReport verify_ratc(const FlowTable& flow_I, const FlowTable& flow_II);
VerifyReport verify_ratc();

/// phi(t, 1) as a power series, from the branch through phi = t^2.
PSeries phi_series_example1(int order);

/// Exponent -> coefficient; every other exponent up to the largest listed
/// one must vanish.
using SeriesCoefficients = std::map<int, Rat>;
SeriesCoefficients printed_example1();

VerifyReport verify_example1(const SeriesCoefficients& printed);
VerifyReport verify_example1();

/// c theta^k with c in Q[q]/(q^6 - 15 q^3 - 45) and theta^3 = t.
struct ThetaMonomial {
  AlgNum coeff;
  int theta_exponent = 0;
};

struct Example3Table {
  std::array<ThetaMonomial, 4> F;  // F2, F4, F5, F7 at (q theta, theta^3, 0)
  AlgNum sigma1_w0;                // sigma1 at (q, 1, 0)
  AlgNum relation;                 // sextic at (q theta, theta^3, 0) divided by theta^6
};

/// Minimal polynomial of q.
MPoly example3_modulus();
/// Throws ZeroDivisor when a denominator is not invertible in the quotient ring.
Example3Table example3_values();
/// Rational function of q mapped into the quotient ring.
AlgNum algnum_of(const RatFn& f);

struct Example3Printed {
  std::array<RatFn, 4> coeffs;   // rational functions of q
  std::array<int, 4> theta_exponents;
  RatFn sigma1_w0;
};
Example3Printed printed_example3();

VerifyReport verify_example3(const Example3Printed& printed);
VerifyReport verify_example3();

}  // namespace hekdv
