#pragma once

#include <string>
#include <vector>

#include "hekdv/mpoly.hpp"

namespace hekdv {

/// Truncated power series c_0 + c_1 v + ... + c_order v^order over Q.
class PSeries {
 public:
  PSeries(Var variable, int order);
  PSeries(Var variable, std::vector<Rat> coefficients, int order);
  /// Truncation of a polynomial in `variable` alone.
  static PSeries from_poly(const MPoly& p, Var variable, int order);

  Var variable() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rat>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_unit() const { return sgn(c_.front()) != 0; }
  /// Index of the first nonzero coefficient, or order()+1 for zero.
  int valuation() const;

  PSeries truncated(int order) const;
  /// Multiplicative inverse; throws SingularExpansion when not a unit.
  PSeries inverse() const;
  MPoly to_poly() const;

  PSeries operator-() const;
  friend PSeries operator+(const PSeries& lhs, const PSeries& rhs);
  friend PSeries operator-(const PSeries& lhs, const PSeries& rhs);
  friend PSeries operator*(const PSeries& lhs, const PSeries& rhs);
  friend bool operator==(const PSeries& lhs, const PSeries& rhs);

  std::string to_string() const;

 private:
  Var var_;
  std::vector<Rat> c_;
};

/// rel(phi = value, t) for a polynomial rel in (phi, t), truncated at value.order().
PSeries evaluate_series(const MPoly& rel, Var phi, const PSeries& value);

/// Newton (Hensel) lifting of a root phi(t) of rel(phi, t) = 0.
///
/// `seed` must satisfy rel(seed, t) = 0 mod t^(seed.order()+1) and
/// d rel / d phi at the seed must be a unit. Returns phi(t) modulo
/// t^(order+1) extending the seed.
PSeries series_newton_solve(const MPoly& rel, Var phi, Var t, int order, const PSeries& seed);

/// Truncation used when no explicit order is requested.
inline constexpr int kDefaultNewtonOrder = 15;

}  // namespace hekdv
