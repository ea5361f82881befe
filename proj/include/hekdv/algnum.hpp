#pragma once

#include <string>
#include <vector>

#include "hekdv/upoly.hpp"

namespace hekdv {

/// Element of Q[q]/(m(q)) for a monic modulus m, stored as its remainder.
class AlgNum {
 public:
  /// Throws MalformedInput unless `modulus` is monic of positive degree.
  AlgNum(UPoly modulus, const UPoly& value);
  /// `minpoly` and `value` must be polynomials in `v` alone.
  static AlgNum from_mpoly(const MPoly& minpoly, const MPoly& value, Var v);

  const UPoly& modulus() const { return m_; }
  /// Remainder coefficients, padded to length deg m.
  std::vector<Rat> coefficients() const;
  const UPoly& value() const { return v_; }
  bool is_zero() const { return v_.empty(); }

  AlgNum operator-() const;
  friend AlgNum operator+(const AlgNum& lhs, const AlgNum& rhs);
  friend AlgNum operator-(const AlgNum& lhs, const AlgNum& rhs);
  friend AlgNum operator*(const AlgNum& lhs, const AlgNum& rhs);
  friend bool operator==(const AlgNum& lhs, const AlgNum& rhs);

  MPoly to_mpoly(Var v) const { return upoly::to_mpoly(v_, v); }
  std::string to_string(Var v) const { return to_mpoly(v).to_string(); }

 private:
  UPoly m_;
  UPoly v_;
};

/// Inverse via the extended Euclidean algorithm; throws ZeroDivisor when
/// gcd(x, m) is not 1.
AlgNum algnum_invert(const AlgNum& x);

}  // namespace hekdv
