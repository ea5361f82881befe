#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hekdv/curve.hpp"
#include "hekdv/ratfn.hpp"

namespace hekdv {

/// The function field of V_g x V_g: Q[X1, Y1, X2, Y2] modulo Y_i^2 = Q_g(X_i),
/// localized at nonzero elements.
class SymSqField {
 public:
  static std::shared_ptr<const SymSqField> make(const CurveParams& params);

  const CurveParams& params() const { return params_; }
  int genus() const { return params_.genus; }
  /// Q_g(X_k) and Q_g'(X_k) for k = 1, 2.
  const MPoly& Q(int k) const { return k == 1 ? q1_ : q2_; }
  const MPoly& dQ(int k) const { return k == 1 ? dq1_ : dq2_; }

  /// Rewrites Y_i^2 -> Q_g(X_i) until p has degree at most one in Y1 and Y2.
  MPoly reduce(const MPoly& p) const;

 private:
  explicit SymSqField(CurveParams params);

  CurveParams params_;
  MPoly q1_, q2_, dq1_, dq2_;
};

using FieldPtr = std::shared_ptr<const SymSqField>;

/// Element num / den of the field. The numerator is Y-reduced; the
/// denominator is a product of powers of monic Y-free polynomials ("atoms"),
/// so zero testing reduces to checking the numerator.
class SymSqElem {
 public:
  struct Factor {
    MPoly atom;
    unsigned exp;
  };

  SymSqElem(FieldPtr field, const MPoly& p);
  /// `den` must be nonzero and free of Y1, Y2.
  SymSqElem(FieldPtr field, const MPoly& num, const MPoly& den);
  static SymSqElem zero(FieldPtr field) { return SymSqElem(std::move(field), MPoly()); }

  const FieldPtr& field() const { return field_; }
  const MPoly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  MPoly den() const;
  bool is_zero() const { return num_.is_zero(); }

  SymSqElem operator-() const;
  friend SymSqElem operator+(const SymSqElem& lhs, const SymSqElem& rhs);
  friend SymSqElem operator-(const SymSqElem& lhs, const SymSqElem& rhs);
  friend SymSqElem operator*(const SymSqElem& lhs, const SymSqElem& rhs);
  /// Throws ZeroDivisor for a zero divisor.
  friend SymSqElem operator/(const SymSqElem& lhs, const SymSqElem& rhs);
  SymSqElem& operator+=(const SymSqElem& rhs) { return *this = *this + rhs; }
  SymSqElem& operator*=(const SymSqElem& rhs) { return *this = *this * rhs; }
  SymSqElem inverse() const;
  SymSqElem pow(unsigned e) const;
  SymSqElem scaled(const Rat& c) const;

  /// Equality in the field (same field required).
  friend bool operator==(const SymSqElem& lhs, const SymSqElem& rhs);

  /// Image under the field automorphism Y1 -> s1*Y1, Y2 -> s2*Y2 (s_i = +-1).
  SymSqElem conjugate(bool flip1, bool flip2) const;

  std::string to_string() const;

 private:
  SymSqElem(FieldPtr field, MPoly num, std::vector<Factor> den, bool);
  void cancel();

  FieldPtr field_;
  MPoly num_;
  std::vector<Factor> den_;  // sorted by atom, exponents positive
};

/// Y-reduced normal form of p on the curve described by params.
MPoly reduce_Y(const MPoly& p, const CurveParams& params);

/// Pullback of a polynomial in a, b, c, d (and y) along
/// a = (X1+X2)/2, b = (X1-X2)^2/4, c = (Y1-Y2)/(X1-X2), d = (Y1+Y2)/2.
SymSqElem abcd_to_xy(const MPoly& e, const FieldPtr& field);
SymSqElem abcd_to_xy(const RatFn& e, const FieldPtr& field);

/// Rewrites a symmetric polynomial in X1, Y1, X2, Y2 as a polynomial in a, b, c, d
/// through X1 = a+s, X2 = a-s, Y1 = d+sc, Y2 = d-sc, s^2 = b. Throws
/// NotSymmetric when an odd power of s survives.
MPoly xy_to_abcd(const MPoly& p);

struct MNPair {
  MPoly M;
  MPoly N_tilde;
};

/// M_g and N~_g = -N_g/2 + a M_g as polynomials in a, b, c, d and y.
MNPair build_MN(int genus);

/// Renames u2, u4, u5, u7 to a, b, c, d (genus-3 coordinates).
MPoly u_to_abcd(const MPoly& p);
RatFn u_to_abcd(const RatFn& f);
MPoly abcd_to_u(const MPoly& p);

/// Pullback of a genus-3 expression in u2, u4, u5, u7.
SymSqElem pullback_u(const RatFn& f, const FieldPtr& field);

}  // namespace hekdv
