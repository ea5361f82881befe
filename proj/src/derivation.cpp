#include "hekdv/derivation.hpp"

#include "hekdv/errors.hpp"

namespace hekdv {

namespace {

constexpr std::array<Var, 4> kGenerators = {Var::X1, Var::Y1, Var::X2, Var::Y2};

std::size_t slot(Var generator) {
  for (std::size_t i = 0; i < kGenerators.size(); ++i)
    if (kGenerators[i] == generator) return i;
  throw IndexError("not a field generator: " + std::string(var_name(generator)));
}

SymSqElem frac(const FieldPtr& f, const MPoly& num, const MPoly& den) { return SymSqElem(f, num, den); }

}  // namespace

std::string derivation_name(DerivationKind kind) {
  switch (kind) {
    case DerivationKind::D1: return "D1";
    case DerivationKind::D2: return "D2";
    case DerivationKind::LLow: return "L_low";
    case DerivationKind::LHigh: return "L_high";
    case DerivationKind::T1: return "T1";
    case DerivationKind::T3: return "T3";
    case DerivationKind::L1G2: return "L1_g2";
    case DerivationKind::L3G2: return "L3_g2";
  }
  throw InternalError("unknown derivation kind");
}

const SymSqElem& Derivation::image(Var generator) const { return images[slot(generator)]; }

Derivation make_derivation(DerivationKind kind, const FieldPtr& field) {
  const SymSqField& f = *field;
  const int g = f.genus();
  if ((kind == DerivationKind::T1 || kind == DerivationKind::T3) && g != 3)
    throw IncompatibleGenus(derivation_name(kind) + " is defined for genus 3 only");
  if ((kind == DerivationKind::L1G2 || kind == DerivationKind::L3G2) && g != 2)
    throw IncompatibleGenus(derivation_name(kind) + " is defined for genus 2 only");

  const MPoly X1 = V(Var::X1), X2 = V(Var::X2), Y1 = V(Var::Y1), Y2 = V(Var::Y2);
  const MPoly diff = X1 - X2;
  const MPoly& dq1 = f.dQ(1);
  const MPoly& dq2 = f.dQ(2);
  const MPoly one(1);
  auto make = [&](const MPoly& x1, const MPoly& y1, const MPoly& x2, const MPoly& y2, const MPoly& den) {
    return Derivation{derivation_name(kind), field,
                      {frac(field, x1, den), frac(field, y1, den), frac(field, x2, den), frac(field, y2, den)}};
  };

  switch (kind) {
    case DerivationKind::D1: return make(2 * Y1, dq1, MPoly(), MPoly(), one);
    case DerivationKind::D2: return make(MPoly(), MPoly(), 2 * Y2, dq2, one);
    case DerivationKind::LLow:
    case DerivationKind::L1G2: return make(-2 * Y1, -dq1, 2 * Y2, dq2, diff);
    case DerivationKind::LHigh:
    case DerivationKind::L3G2: return make(2 * X2 * Y1, X2 * dq1, -2 * X1 * Y2, -X1 * dq2, diff);
    case DerivationKind::T1: return make(-2 * Y1 * X2, -dq1 * X2, 2 * Y2 * X1, dq2 * X1, X1 * X2 * diff);
    case DerivationKind::T3:
      return make(2 * X2 * X2 * Y1, X2 * X2 * dq1, -2 * X1 * X1 * Y2, -X1 * X1 * dq2, X1 * X2 * diff);
  }
  throw InternalError("unknown derivation kind");
}

SymSqElem derive(const Derivation& d, const SymSqElem& e) {
  const FieldPtr& field = e.field();
  const MPoly& n = e.num();
  SymSqElem dn = SymSqElem::zero(field);
  for (std::size_t i = 0; i < kGenerators.size(); ++i) {
    const MPoly partial = n.derivative(kGenerators[i]);
    if (!partial.is_zero()) dn += SymSqElem(field, partial) * d.images[i];
  }
  if (e.den_factors().empty()) return dn;

  // d(n/D) = (d(n) - n * sum e_i d(f_i)/f_i) / D for D = prod f_i^e_i.
  SymSqElem log_d = SymSqElem::zero(field);
  for (const auto& f : e.den_factors()) {
    SymSqElem df = SymSqElem::zero(field);
    for (Var v : {Var::X1, Var::X2}) {
      const MPoly partial = f.atom.derivative(v);
      if (!partial.is_zero()) df += SymSqElem(field, partial) * d.image(v);
    }
    log_d += df.scaled(Rat(f.exp)) * SymSqElem(field, MPoly(1), f.atom);
  }
  const SymSqElem inv_den(field, MPoly(1), e.den());
  return (dn - SymSqElem(field, n) * log_d) * inv_den;
}

SymSqElem commutator(const Derivation& d1, const Derivation& d2, const SymSqElem& e) {
  return derive(d1, derive(d2, e)) - derive(d2, derive(d1, e));
}

std::array<SymSqElem, 2> compatibility_defect(const Derivation& d) {
  const FieldPtr& f = d.field;
  auto defect = [&](Var X, Var Y, int k) {
    return SymSqElem(f, 2 * V(Y)) * d.image(Y) - SymSqElem(f, f->dQ(k)) * d.image(X);
  };
  return {defect(Var::X1, Var::Y1, 1), defect(Var::X2, Var::Y2, 2)};
}

SymSqElem apply_homomorphism(const SymSqElem& e, const FieldPtr& target, const SymSqElem& y1_image,
                             const SymSqElem& y2_image) {
  SymSqElem out = SymSqElem::zero(target);
  const auto by_y1 = e.num().coefficients(Var::Y1);
  for (std::size_t j = 0; j < by_y1.size(); ++j) {
    const auto by_y2 = by_y1[j].coefficients(Var::Y2);
    for (std::size_t k = 0; k < by_y2.size(); ++k) {
      if (by_y2[k].is_zero()) continue;
      out += SymSqElem(target, by_y2[k]) * y1_image.pow(static_cast<unsigned>(j)) *
             y2_image.pow(static_cast<unsigned>(k));
    }
  }
  if (e.den_factors().empty()) return out;
  return out * SymSqElem(target, MPoly(1), e.den());
}

SymSqElem psi1(const SymSqElem& e, const FieldPtr& target) {
  if (e.field()->genus() != 2 || target->genus() != 3) throw IncompatibleGenus("psi1 maps genus 2 to genus 3");
  return apply_homomorphism(e, target, SymSqElem(target, V(Var::Y1), V(Var::X1)),
                            SymSqElem(target, V(Var::Y2), V(Var::X2)));
}

SymSqElem psi2(const SymSqElem& e, const FieldPtr& target) {
  if (e.field()->genus() != 3 || target->genus() != 2) throw IncompatibleGenus("psi2 maps genus 3 to genus 2");
  return apply_homomorphism(e, target, SymSqElem(target, V(Var::X1) * V(Var::Y1)),
                            SymSqElem(target, V(Var::X2) * V(Var::Y2)));
}

FieldPtr genus3_field() {
  static const FieldPtr field = SymSqField::make(CurveParams::symbolic(3));
  return field;
}

FieldPtr genus2_field() {
  static const FieldPtr field = SymSqField::make(CurveParams::symbolic(2));
  return field;
}

FieldPtr v32_field() {
  static const FieldPtr field = SymSqField::make(CurveParams::degenerate_v32());
  return field;
}

}  // namespace hekdv
