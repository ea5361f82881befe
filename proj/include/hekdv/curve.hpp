#pragma once

#include <vector>

#include "hekdv/mpoly.hpp"

namespace hekdv {

/// Coefficients y_4, ..., y_{4g+2} of Y^2 = Q_g(X), either all formal symbols
/// (possibly with some pinned to zero) or all rational numbers.
struct CurveParams {
  enum class Mode { Symbolic, Numeric };

  int genus = 3;
  Mode mode = Mode::Symbolic;
  std::vector<MPoly> coeffs;  // coeffs[j] is y_{2j+4}

  static CurveParams symbolic(int genus);
  /// Throws MalformedInput unless exactly 2g values are given.
  static CurveParams numeric(int genus, const std::vector<Rat>& values);
  /// The genus-3 curve X^2 Q_2(X): y_4..y_10 symbolic, y_12 = y_14 = 0.
  static CurveParams degenerate_v32();

  /// Coefficient y_k, k even in [4, 4g+2].
  const MPoly& y(int k) const;
  void validate() const;
};

/// Q_g(var) = var^{2g+1} + y_4 var^{2g-1} - y_6 var^{2g-2} + ... - y_{4g+2}.
MPoly curve_Q(const CurveParams& params, Var var = Var::x);

/// True iff Q_g has no multiple root (numeric mode only; ModeError otherwise).
bool in_Bg(const CurveParams& params);

/// Numerator of 2Y dr_{2i-1}/dX, a polynomial in var and y_4..y_{4g+2}.
MPoly dr_numerator(int genus, int i, Var var = Var::x);

}  // namespace hekdv
