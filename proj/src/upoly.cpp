#include "hekdv/upoly.hpp"

#include <algorithm>
#include <string>

#include "hekdv/errors.hpp"

namespace hekdv::upoly {

UPoly trim(UPoly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

const Rat& leading(const UPoly& p) {
  if (p.empty()) throw InternalError("leading coefficient of the zero polynomial");
  return p.back();
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(std::move(out));
}

UPoly sub(const UPoly& a, const UPoly& b) { return add(a, scale(b, Rat(-1))); }

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(std::move(out));
}

UPoly scale(const UPoly& a, const Rat& c) {
  UPoly out = a;
  for (auto& x : out) x *= c;
  return trim(std::move(out));
}

UPoly derivative(const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly out(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) out[k - 1] = a[k] * static_cast<long>(k);
  return trim(std::move(out));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw MalformedInput("polynomial division by zero");
  UPoly r = trim(a);
  if (degree(r) < degree(b)) return {{}, r};
  UPoly q(r.size() - b.size() + 1);
  const Rat inv = 1 / leading(b);
  while (!r.empty() && degree(r) >= degree(b)) {
    const std::size_t shift = r.size() - b.size();
    const Rat c = r.back() * inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r = trim(std::move(r));
  }
  return {trim(std::move(q)), r};
}

UPoly monic(const UPoly& a) {
  if (a.empty()) return {};
  return scale(a, 1 / leading(a));
}

UPoly gcd(const UPoly& a, const UPoly& b) { return ext_gcd(a, b).g; }

ExtGcd ext_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = trim(a), r1 = trim(b);
  UPoly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s2 = sub(s0, mul(q, s1));
    UPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  const Rat inv = 1 / leading(r0);
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

Rat resultant(const UPoly& a_in, const UPoly& b_in) {
  UPoly a = trim(a_in), b = trim(b_in);
  if (a.empty() || b.empty()) return 0;
  Rat acc = 1;
  for (;;) {
    const int m = degree(a), n = degree(b);
    if (n == 0) {
      Rat p = 1;
      for (int k = 0; k < m; ++k) p *= b[0];
      return acc * p;
    }
    UPoly r = divmod(a, b).second;
    if (r.empty()) return 0;
    const int rd = degree(r);
    if ((m * n) % 2 == 1) acc = -acc;
    for (int k = 0; k < m - rd; ++k) acc *= leading(b);
    a = std::move(b);
    b = std::move(r);
  }
}

UPoly from_mpoly(const MPoly& p, Var v) {
  UPoly out(p.degree(v) + 1);
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[v];
    if (!(t.mono / Monomial(v, e)).is_one())
      throw MalformedInput("expected a polynomial in " + std::string(var_name(v)) + " only");
    out[e] += t.coeff;
  }
  return trim(std::move(out));
}

MPoly to_mpoly(const UPoly& p, Var v) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (sgn(p[k]) != 0) terms.push_back(Term{Monomial(v, static_cast<unsigned>(k)), p[k]});
  return MPoly::from_terms(std::move(terms));
}

}  // namespace hekdv::upoly
