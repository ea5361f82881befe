#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hekdv/mpoly.hpp"

namespace hekdv {

/// Fraction of two MPoly values.
///
/// Normalization is deliberately shallow: the denominator is made monic
/// (leading coefficient 1 under the global order) and common monomial factors
/// are removed. No multivariate gcd is taken; equality is decided by
/// cross-multiplication.
class RatFn {
 public:
  RatFn() : den_(1) {}
  RatFn(MPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFn(MPoly num, MPoly den);
  explicit RatFn(const Rat& c) : num_(c), den_(1) {}
  explicit RatFn(long c) : num_(c), den_(1) {}

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFn derivative(Var v) const;
  RatFn substitute(Var v, const RatFn& value) const;
  RatFn compose(const std::vector<std::pair<Var, RatFn>>& images) const;
  /// Removes `factor` from numerator and denominator as often as it divides both.
  RatFn cancel(const MPoly& factor) const;
  RatFn pow(unsigned e) const;

  template <class Scalar, class ValueFn>
  Scalar evaluate(ValueFn&& value) const {
    return num_.evaluate<Scalar>(value) / den_.evaluate<Scalar>(value);
  }

  RatFn operator-() const { return RatFn(-num_, den_, Normalized{}); }
  friend RatFn operator+(const RatFn& lhs, const RatFn& rhs);
  friend RatFn operator-(const RatFn& lhs, const RatFn& rhs) { return lhs + (-rhs); }
  friend RatFn operator*(const RatFn& lhs, const RatFn& rhs);
  friend RatFn operator/(const RatFn& lhs, const RatFn& rhs);
  RatFn& operator+=(const RatFn& rhs) { return *this = *this + rhs; }
  RatFn& operator-=(const RatFn& rhs) { return *this = *this - rhs; }
  RatFn& operator*=(const RatFn& rhs) { return *this = *this * rhs; }

  std::string to_string() const;

 private:
  struct Normalized {};
  RatFn(MPoly num, MPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  MPoly num_;
  MPoly den_;
};

/// Representation-independent equality: f.num*g.den - g.num*f.den == 0.
bool ratfn_equal(const RatFn& f, const RatFn& g);

inline bool operator==(const RatFn& f, const RatFn& g) { return ratfn_equal(f, g); }

std::ostream& operator<<(std::ostream& os, const RatFn& f);

/// Substitutes rational functions into a polynomial without intermediate
/// denominator growth: each image denominator appears to its maximal power only.
RatFn compose_rational(const MPoly& p, const std::vector<std::pair<Var, RatFn>>& images);

RatFn rename(const RatFn& f, const std::vector<std::pair<Var, Var>>& mapping);

/// Parses an arithmetic expression over the global symbols: integers, symbol
/// names, + - * / ^ (non-negative integer exponents) and parentheses.
RatFn parse_ratfn(std::string_view text);

/// As parse_ratfn, but the result must be a polynomial.
MPoly parse_poly(std::string_view text);

}  // namespace hekdv
