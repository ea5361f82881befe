#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hekdv/rat.hpp"
#include "hekdv/symbols.hpp"

namespace hekdv {

struct Term {
  Monomial mono;
  Rat coeff;
};

/// Sparse multivariate polynomial over Q in the global symbol order.
///
/// Terms are stored sorted by decreasing monomial (lexicographic), with no
/// zero coefficients, so structural equality is polynomial equality.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(const Rat& c);
  explicit MPoly(long c) : MPoly(Rat(c)) {}

  static MPoly var(Var v, unsigned e = 1);
  static MPoly monomial(const Monomial& m, const Rat& c);
  /// Canonicalizes arbitrary terms: sorts, merges duplicates, drops zeros.
  static MPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; requires is_constant().
  Rat constant_value() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  unsigned degree(Var v) const;
  bool contains(Var v) const { return degree(v) > 0; }
  /// GCD of all monomials (the largest monomial dividing every term).
  Monomial monomial_content() const;

  MPoly derivative(Var v) const;
  /// Coefficient of v^k, as a polynomial free of v.
  MPoly coefficient(Var v, unsigned k) const;
  /// Coefficients of v^0..v^degree(v).
  std::vector<MPoly> coefficients(Var v) const;

  MPoly substitute(Var v, const MPoly& value) const;
  /// Simultaneous substitution of several symbols.
  MPoly compose(const std::vector<std::pair<Var, MPoly>>& images) const;
  /// Rewrites v^n -> replacement until every exponent of v is below n.
  MPoly reduce_power(Var v, unsigned n, const MPoly& replacement) const;

  /// Exact quotient by `divisor`, or nullopt when it does not divide.
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;
  /// Requires m to divide every term.
  MPoly divide_monomial(const Monomial& m) const;

  MPoly pow(unsigned e) const;
  MPoly scaled(const Rat& c) const;

  /// Numeric evaluation; `value(v)` supplies the value of each symbol present.
  template <class Scalar, class ValueFn>
  Scalar evaluate(ValueFn&& value) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);

  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend MPoly operator*(const Rat& c, const MPoly& p) { return p.scaled(c); }
  friend MPoly operator*(const MPoly& p, const Rat& c) { return p.scaled(c); }
  friend bool operator==(const MPoly& lhs, const MPoly& rhs);

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

MPoly operator+(const MPoly& p, long c);
MPoly operator-(const MPoly& p, long c);
MPoly operator*(long c, const MPoly& p);

/// Shorthand for MPoly::var.
inline MPoly V(Var v, unsigned e = 1) { return MPoly::var(v, e); }

/// Renames symbols; every target must be absent from `p` or itself renamed.
MPoly rename(const MPoly& p, const std::vector<std::pair<Var, Var>>& mapping);

template <class Scalar, class ValueFn>
Scalar MPoly::evaluate(ValueFn&& value) const {
  Scalar total{};
  for (const auto& t : terms_) {
    Scalar term = Scalar(t.coeff.get_d());
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      const Scalar base = value(var_at(i));
      Scalar power = base;
      for (unsigned k = 1; k < e; ++k) power *= base;
      term *= power;
    }
    total += term;
  }
  return total;
}

}  // namespace hekdv
