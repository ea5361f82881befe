#pragma once

#include <array>
#include <string>

#include "hekdv/symsq.hpp"

namespace hekdv {

enum class DerivationKind {
  D1,
  D2,
  LLow,    // L_{2g-3} = (D2 - D1)/(X1 - X2)
  LHigh,   // L_{2g-1} = (X2 D1 - X1 D2)/(X1 - X2)
  T1,      // -L_5/(X1 X2), genus 3
  T3,      // L_3 + (X1 + X2)/(X1 X2) L_5, genus 3
  L1G2,    // L_1 on a genus-2 field
  L3G2,    // L_3 on a genus-2 field
};

std::string derivation_name(DerivationKind kind);

/// Derivation of the field given by its images on X1, Y1, X2, Y2.
struct Derivation {
  std::string name;
  FieldPtr field;
  std::array<SymSqElem, 4> images;  // X1, Y1, X2, Y2

  const SymSqElem& image(Var generator) const;
};

/// Throws IncompatibleGenus when the kind does not exist on the field's genus.
Derivation make_derivation(DerivationKind kind, const FieldPtr& field);

/// Applies the derivation via formal partials and the quotient rule.
SymSqElem derive(const Derivation& d, const SymSqElem& e);

/// [d1, d2] applied to e.
SymSqElem commutator(const Derivation& d1, const Derivation& d2, const SymSqElem& e);

/// 2 Y_i d(Y_i) - Q'(X_i) d(X_i) for i = 1, 2; both vanish for a derivation of the field.
std::array<SymSqElem, 2> compatibility_defect(const Derivation& d);

/// Field homomorphism fixing X1, X2 and sending Y_i to the given images.
SymSqElem apply_homomorphism(const SymSqElem& e, const FieldPtr& target, const SymSqElem& y1_image,
                             const SymSqElem& y2_image);

/// psi1: genus-2 field -> field of X^2 Q_2(X), Y_i -> Y_i/X_i.
SymSqElem psi1(const SymSqElem& e, const FieldPtr& target);
/// psi2: field of X^2 Q_2(X) -> genus-2 field, Y_i -> X_i Y_i.
SymSqElem psi2(const SymSqElem& e, const FieldPtr& target);

/// Shared fields with symbolic coefficients: genus 3, genus 2, and X^2 Q_2(X).
FieldPtr genus3_field();
FieldPtr genus2_field();
FieldPtr v32_field();

}  // namespace hekdv
