#pragma once

#include <array>
#include <string>
#include <vector>

#include "hekdv/derivation.hpp"
#include "hekdv/report.hpp"

namespace hekdv {

/// u = 4 u2, v = 2(u4 - u2^2) and their T1 (prime) / T3 (dot) derivatives,
/// as elements of the given genus-3 field.
struct DKdVJets {
  SymSqElem u, v;
  SymSqElem u_x, u_xx, u_xxx;  // u', u'', u'''
  SymSqElem u_t, u_tx, u_txx;  // u-dot, u-dot', u-dot''
  SymSqElem v_x, v_xx, v_xxx;
  SymSqElem v_t;
};

DKdVJets dkdv_jets(const FieldPtr& field);

/// Coefficients of the deformed hierarchy, defaulting to the printed ones:
///   v^4 (u''' + a1 u-dot + a2 u u') + a3 y12 v u-dot + a4 y14 (v u' + a5 u u-dot) = 0
///   v^4 (u-dot'' + b1 u u-dot + b2 u' v) + b3 y12 v v-dot + b4 y14 (v v' + b5 u v-dot) = 0
///   u-dot = c1 v'
///   2 v-dot = d1 v u' + d2 u v'
struct DKdVCoefficients {
  Rat a1 = -4, a2 = -6, a3 = -32, a4 = 32, a5 = -3;
  Rat b1 = -4, b2 = -2, b3 = -32, b4 = 32, b5 = -3;
  Rat c1 = 1;
  Rat d1 = 1, d2 = -1;
};

/// T1^2(u2) against the printed right-hand side, plus its y12 = y14 = 0
/// specialization.
VerifyReport verify_seconddif(const RatFn& rhs);
VerifyReport verify_seconddif();

/// The four identities of the deformed hierarchy, one report each, with a
/// weight audit of the summands of every identity.
std::vector<VerifyReport> verify_dkdv_equations(const DKdVCoefficients& k);
std::vector<VerifyReport> verify_dkdv_equations();

/// With y12 = y14 = 0: u''' = 3(u^2)' + 4 u-dot and v''' = 3(uv)' - 2 v-dot,
/// plus the negative control with symbolic y12.
VerifyReport verify_kdv_reduction();

/// Images of the genus-2 coordinates u2, u4, u3, u5 under psi1, as genus-3
/// u-expressions.
struct PsiImages {
  std::array<RatFn, 4> images;
};
PsiImages printed_psi_images();

/// psi2 o psi1 = id on generators, the four coordinate images, and
/// T1 o psi1 = psi1 o L1, T3 o psi1 = psi1 o L3 on generators.
VerifyReport verify_psi_intertwine(const PsiImages& images);
VerifyReport verify_psi_intertwine();

/// Weight of a homogeneous element (numerator minus denominator weight) or
/// nullopt when it is not homogeneous or zero.
std::optional<int> element_weight(const SymSqElem& e);

}  // namespace hekdv
