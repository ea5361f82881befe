#include "hekdv/pseries.hpp"

#include <algorithm>
#include <sstream>

#include "hekdv/errors.hpp"

namespace hekdv {

PSeries::PSeries(Var variable, int order) : var_(variable) {
  if (order < 0) throw MalformedInput("power series order must be non-negative");
  c_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

PSeries::PSeries(Var variable, std::vector<Rat> coefficients, int order) : PSeries(variable, order) {
  for (std::size_t k = 0; k < c_.size() && k < coefficients.size(); ++k) c_[k] = std::move(coefficients[k]);
}

PSeries PSeries::from_poly(const MPoly& p, Var variable, int order) {
  PSeries out(variable, order);
  for (const auto& t : p.terms()) {
    if (!(t.mono / Monomial(variable, t.mono[variable])).is_one())
      throw MalformedInput("series literal contains symbols other than " + std::string(var_name(variable)));
    const int k = static_cast<int>(t.mono[variable]);
    if (k <= order) out.c_[static_cast<std::size_t>(k)] += t.coeff;
  }
  return out;
}

bool PSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return sgn(r) == 0; });
}

int PSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return static_cast<int>(k);
  return order() + 1;
}

PSeries PSeries::truncated(int order) const {
  PSeries out(var_, order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) out.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
  return out;
}

PSeries PSeries::inverse() const {
  if (!is_unit()) throw SingularExpansion("power series with zero constant term is not invertible");
  PSeries out(var_, order());
  const Rat inv0 = 1 / c_[0];
  out.c_[0] = inv0;
  for (std::size_t n = 1; n < c_.size(); ++n) {
    Rat acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * out.c_[n - k];
    out.c_[n] = -acc * inv0;
  }
  return out;
}

MPoly PSeries::to_poly() const {
  MPoly p;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) p += MPoly::monomial(Monomial(var_, static_cast<unsigned>(k)), c_[k]);
  return p;
}

PSeries PSeries::operator-() const {
  PSeries out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

namespace {

void check_compatible(const PSeries& lhs, const PSeries& rhs) {
  if (lhs.variable() != rhs.variable()) throw MalformedInput("power series in different variables");
}

}  // namespace

PSeries operator+(const PSeries& lhs, const PSeries& rhs) {
  check_compatible(lhs, rhs);
  PSeries out = lhs.truncated(std::min(lhs.order(), rhs.order()));
  for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] += rhs.c_[k];
  return out;
}

PSeries operator-(const PSeries& lhs, const PSeries& rhs) { return lhs + (-rhs); }

PSeries operator*(const PSeries& lhs, const PSeries& rhs) {
  check_compatible(lhs, rhs);
  const int n = std::min(lhs.order(), rhs.order());
  PSeries out(lhs.var_, n);
  for (int i = 0; i <= n; ++i) {
    if (sgn(lhs.c_[static_cast<std::size_t>(i)]) == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      out.c_[static_cast<std::size_t>(i + j)] += lhs.c_[static_cast<std::size_t>(i)] * rhs.c_[static_cast<std::size_t>(j)];
  }
  return out;
}

bool operator==(const PSeries& lhs, const PSeries& rhs) { return lhs.var_ == rhs.var_ && lhs.c_ == rhs.c_; }

std::string PSeries::to_string() const {
  std::ostringstream os;
  const MPoly p = to_poly();
  os << p.to_string() << " + O(" << var_name(var_) << "^" << order() + 1 << ")";
  return os.str();
}

PSeries evaluate_series(const MPoly& rel, Var phi, const PSeries& value) {
  const Var t = value.variable();
  const int n = value.order();
  // Horner in phi with coefficients that are polynomials in t.
  const auto coeffs = rel.coefficients(phi);
  PSeries acc(t, n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * value + PSeries::from_poly(*it, t, n);
  return acc;
}

PSeries series_newton_solve(const MPoly& rel, Var phi, Var t, int order, const PSeries& seed) {
  if (order < 0) throw MalformedInput("negative truncation order");
  if (seed.variable() != t) throw MalformedInput("seed is not a series in the expansion variable");
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const Var v = var_at(i);
    if (v != phi && v != t && rel.contains(v))
      throw MalformedInput("relation contains symbol " + std::string(var_name(v)) + " besides phi and t");
  }
  if (!evaluate_series(rel, phi, seed).is_zero())
    throw MalformedInput("seed does not satisfy the relation to its own order");

  const MPoly drel = rel.derivative(phi);
  PSeries current = seed.truncated(order);
  int precision = std::min(seed.order(), order);  // current is exact mod t^(precision+1)
  for (;;) {
    const PSeries residual = evaluate_series(rel, phi, current);
    if (residual.is_zero()) return current;
    if (precision >= order) throw InternalError("Newton iteration failed to converge");
    const PSeries slope = evaluate_series(drel, phi, current);
    if (!slope.is_unit()) throw SingularExpansion("d rel / d phi is not a unit at the seed");
    current = current - residual * slope.inverse();
    // Quadratic convergence: exact modulo t^(2(p+1)) after one step.
    precision = std::min(2 * precision + 1, order);
  }
}

}  // namespace hekdv
