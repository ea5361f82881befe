#include "hekdv/curve.hpp"

#include <string>

#include "hekdv/errors.hpp"
#include "hekdv/upoly.hpp"

namespace hekdv {

namespace {

void check_genus(int genus) {
  if (genus != 2 && genus != 3) throw IncompatibleGenus("genus must be 2 or 3, got " + std::to_string(genus));
}

// y_k with the conventions y_0 = 1, y_2 = 0.
MPoly y_or_unit(int k) {
  if (k == 0) return MPoly(1);
  if (k == 2) return MPoly();
  return V(y_var(k));
}

}  // namespace

CurveParams CurveParams::symbolic(int genus) {
  check_genus(genus);
  CurveParams p;
  p.genus = genus;
  for (int k = 4; k <= 4 * genus + 2; k += 2) p.coeffs.push_back(V(y_var(k)));
  return p;
}

CurveParams CurveParams::numeric(int genus, const std::vector<Rat>& values) {
  check_genus(genus);
  if (values.size() != static_cast<std::size_t>(2 * genus))
    throw MalformedInput("genus " + std::to_string(genus) + " needs " + std::to_string(2 * genus) +
                         " coefficients, got " + std::to_string(values.size()));
  CurveParams p;
  p.genus = genus;
  p.mode = Mode::Numeric;
  for (const auto& v : values) p.coeffs.emplace_back(v);
  return p;
}

CurveParams CurveParams::degenerate_v32() {
  CurveParams p = symbolic(3);
  p.coeffs[4] = MPoly();
  p.coeffs[5] = MPoly();
  return p;
}

const MPoly& CurveParams::y(int k) const {
  if (k < 4 || k > 4 * genus + 2 || k % 2 != 0) throw IndexError("no curve coefficient y" + std::to_string(k));
  return coeffs[static_cast<std::size_t>((k - 4) / 2)];
}

void CurveParams::validate() const {
  check_genus(genus);
  if (coeffs.size() != static_cast<std::size_t>(2 * genus)) throw MalformedInput("wrong number of curve coefficients");
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const bool constant = coeffs[j].is_constant() || coeffs[j].is_zero();
    if (mode == Mode::Numeric && !constant) throw ModeError("numeric curve with a symbolic coefficient");
    if (mode == Mode::Symbolic && !constant && !(coeffs[j] == V(y_var(static_cast<int>(2 * j + 4)))))
      throw MalformedInput("symbolic coefficient must be the matching y symbol or a constant");
  }
}

MPoly curve_Q(const CurveParams& params, Var var) {
  params.validate();
  const int top = 2 * params.genus + 1;
  MPoly q = V(var, static_cast<unsigned>(top));
  for (int i = 2; i <= top; ++i) {
    const MPoly term = params.y(2 * i) * V(var, static_cast<unsigned>(top - i));
    if (i % 2 == 0)
      q += term;
    else
      q -= term;
  }
  return q;
}

bool in_Bg(const CurveParams& params) {
  if (params.mode != CurveParams::Mode::Numeric) throw ModeError("in_Bg needs numeric curve coefficients");
  const UPoly q = upoly::from_mpoly(curve_Q(params, Var::x), Var::x);
  return sgn(upoly::resultant(q, upoly::derivative(q))) != 0;
}

MPoly dr_numerator(int genus, int i, Var var) {
  check_genus(genus);
  if (i < 1 || i > genus) throw IndexError("dr index must lie in [1, g]");
  MPoly out;
  for (int k = genus - i + 1; k <= genus + i - 1; ++k) {
    const int sign = (genus + i - k) % 2 == 0 ? 1 : -1;
    out += (sign * (k + i - genus)) * (y_or_unit(2 * genus + 2 * i - 2 * k - 2) * V(var, static_cast<unsigned>(k)));
  }
  return out;
}

}  // namespace hekdv
