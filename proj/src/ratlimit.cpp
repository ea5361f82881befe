#include "hekdv/ratlimit.hpp"

#include <algorithm>

#include "hekdv/errors.hpp"

namespace hekdv {

namespace {

std::size_t w_slot(int index) {
  if (index != 1 && index != 3 && index != 5) throw IndexError("no sigma variable w" + std::to_string(index));
  return static_cast<std::size_t>(index / 2);
}

RatFn R(const char* text) { return parse_ratfn(text); }

// sigma_i / sigma_1 style quotients for the genus-3 polynomial, in w1, w3, w5.
RatFn F_in_w(int i) {
  const SigmaRat s = sigma_rational(3);
  const MPoly& s1 = s.partial(1);
  auto f = [&](const MPoly& p) { return RatFn(p, s1); };
  const RatFn f1 = f(s.partial(1, 1)), f2 = f(s.partial(3)), f3 = f(s.partial(1, 3)), f4 = f(s.partial(5));
  const RatFn f5 = f(s.partial(3, 3)), g5 = f(s.partial(1, 5)), f7 = f(s.partial(3, 5));
  const RatFn half(Rat(1, 2)), quarter(Rat(1, 4)), two(2L);
  switch (i) {
    case 2: return -(half * f2);
    case 4: return quarter * f2 * f2 - f4;
    case 5: return half * (f1 * f2 * f2 + f5 - two * f2 * f3);
    case 7:
      return quarter * (two * f2 * f2 * f3 - two * f3 * f4 - f1 * f2.pow(3) + two * f1 * f2 * f4 - f2 * f5 +
                        two * f7 - two * f2 * g5);
    default: throw IndexError("F_i exists for i in {2, 4, 5, 7} only, got " + std::to_string(i));
  }
}

RatFn to_xt(const RatFn& f) { return rename(f, {{Var::w1, Var::x}, {Var::w3, Var::t}}); }

void add_kdv_residuals(VerifyReport& r, const std::string& prefix, const RatFn& U, const RatFn& V,
                       const RationalKdVCoefficients& k) {
  const RatFn Ux = U.derivative(Var::x), Ut = U.derivative(Var::t);
  const RatFn Uxxx = Ux.derivative(Var::x).derivative(Var::x);
  const RatFn Utxx = Ut.derivative(Var::x).derivative(Var::x);
  auto c = [](const Rat& v) { return RatFn(v); };
  r.add(prefix + "''' + a1 " + prefix + "-dot + a2 " + prefix + prefix + "'",
        Uxxx + c(k.a1) * Ut + c(k.a2) * U * Ux);
  r.add(prefix + "-dot'' + b1 " + prefix + prefix + "-dot + b2 " + prefix + "'V",
        Utxx + c(k.b1) * U * Ut + c(k.b2) * Ux * V);
  r.add(prefix + "-dot - c1 V'", Ut - c(k.c1) * V.derivative(Var::x));
}

// n / s^k with s = sigma1(phi, w3, w5), all reduced modulo the sextic.
struct SFrac {
  PhiRingElem num;
  unsigned k = 0;
};

class SigmaLocal {
 public:
  SigmaLocal() {
    const SigmaRat s = sigma_rational(3);
    auto at_phi = [](const MPoly& p) { return phi_reduce(rename(p, {{Var::w1, Var::phi}})); };
    s_ = at_phi(s.partial(1));
    sigma3_ = at_phi(s.partial(3));
    sigma5_ = at_phi(s.partial(5));
    for (int i : {1, 3, 5}) {
      first_.push_back(SFrac{at_phi(s.partial(i)), 1});
      for (int j : {1, 3, 5}) second_.push_back(SFrac{at_phi(s.partial(i, j)), 1});
    }
    powers_.push_back(phi_reduce(MPoly(1)));
  }

  const PhiRingElem& s() const { return s_; }
  const PhiRingElem& sigma_w(Var w) const { return w == Var::w3 ? sigma3_ : sigma5_; }

  const PhiRingElem& s_pow(unsigned e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * s_);
    return powers_[e];
  }

  SFrac lift(const SFrac& x, unsigned k) {
    if (x.k == k) return x;
    return SFrac{x.num * s_pow(k - x.k), k};
  }

  SFrac add(const SFrac& a, const SFrac& b) {
    const unsigned k = std::max(a.k, b.k);
    return SFrac{lift(a, k).num + lift(b, k).num, k};
  }

  SFrac mul(const SFrac& a, const SFrac& b) { return SFrac{a.num * b.num, a.k + b.k}; }

  static SFrac scale(const SFrac& a, const Rat& c) { return SFrac{a.num * phi_reduce(MPoly(c)), a.k}; }

  // Total derivative along w (w3 or w5) with phi_w = -sigma_w / sigma1.
  SFrac derive(const SFrac& x, Var w) {
    const PhiRingElem& sw = sigma_w(w);
    const PhiRingElem dn = s_ * partial(x.num, w) - sw * partial(x.num, Var::phi);
    const PhiRingElem ds = s_ * partial(s_, w) - sw * partial(s_, Var::phi);
    return SFrac{dn * s_ - phi_reduce(MPoly(static_cast<long>(x.k))) * x.num * ds, x.k + 2};
  }

  // Evaluates a polynomial in u2, u4, u5, u7 at the given values.
  SFrac evaluate(const MPoly& p, const std::array<SFrac, 4>& values) {
    std::array<std::vector<SFrac>, 4> pows;
    for (std::size_t j = 0; j < 4; ++j) pows[j].push_back(SFrac{phi_reduce(MPoly(1)), 0});
    SFrac total{PhiRingElem(), 0};
    for (const auto& term : p.terms()) {
      SFrac prod{phi_reduce(MPoly(term.coeff)), 0};
      for (std::size_t j = 0; j < 4; ++j) {
        const unsigned e = term.mono[kUVars[j]];
        while (pows[j].size() <= e) pows[j].push_back(mul(pows[j].back(), values[j]));
        if (e) prod = mul(prod, pows[j][e]);
      }
      total = add(total, prod);
    }
    return total;
  }

  // a/s^i - b/s^j as a single numerator over a common power.
  PhiRingElem difference(const SFrac& a, const SFrac& b) {
    const unsigned k = std::max(a.k, b.k);
    return lift(a, k).num - lift(b, k).num;
  }

  SFrac F(int i) {
    auto f = [&](int a, int b) { return second_[w_slot(a) * 3 + w_slot(b)]; };
    const SFrac f1 = f(1, 1), f2 = first_[1], f3 = f(1, 3), f4 = first_[2];
    const SFrac f5 = f(3, 3), g5 = f(1, 5), f7 = f(3, 5);
    auto neg = [](const SFrac& a) { return scale(a, Rat(-1)); };
    switch (i) {
      case 2: return scale(f2, Rat(-1, 2));
      case 4: return add(scale(mul(f2, f2), Rat(1, 4)), neg(f4));
      case 5: return scale(add(add(mul(f1, mul(f2, f2)), f5), scale(mul(f2, f3), Rat(-2))), Rat(1, 2));
      case 7: {
        const SFrac f2sq = mul(f2, f2);
        SFrac sum = scale(mul(f2sq, f3), Rat(2));
        sum = add(sum, scale(mul(f3, f4), Rat(-2)));
        sum = add(sum, neg(mul(f1, mul(f2sq, f2))));
        sum = add(sum, scale(mul(f1, mul(f2, f4)), Rat(2)));
        sum = add(sum, neg(mul(f2, f5)));
        sum = add(sum, scale(f7, Rat(2)));
        sum = add(sum, scale(mul(f2, g5), Rat(-2)));
        return scale(sum, Rat(1, 4));
      }
      default: throw IndexError("F_i exists for i in {2, 4, 5, 7} only, got " + std::to_string(i));
    }
  }

 private:
  static PhiRingElem partial(const PhiRingElem& p, Var v) { return phi_reduce(p.to_ratfn().num().derivative(v)); }

  PhiRingElem s_, sigma3_, sigma5_;
  std::vector<SFrac> first_, second_;
  std::vector<PhiRingElem> powers_;
};

ThetaMonomial theta_monomial(const RatFn& f) {
  auto single = [](const MPoly& p, unsigned& degree) -> MPoly {
    const auto cs = p.coefficients(Var::theta);
    MPoly out;
    for (std::size_t e = 0; e < cs.size(); ++e) {
      if (cs[e].is_zero()) continue;
      if (!out.is_zero()) throw InternalError("expression is not a monomial in theta");
      out = cs[e];
      degree = static_cast<unsigned>(e);
    }
    return out;
  };
  unsigned a = 0, b = 0;
  const MPoly n = single(f.num(), a);
  const MPoly d = single(f.den(), b);
  if (n.is_zero()) return {algnum_of(RatFn()), 0};
  return {algnum_of(RatFn(n, d)), static_cast<int>(a) - static_cast<int>(b)};
}

}  // namespace

Var w_var(int index) {
  static constexpr std::array<Var, 3> kW = {Var::w1, Var::w3, Var::w5};
  return kW[w_slot(index)];
}

const MPoly& SigmaRat::partial(int i) const {
  if (static_cast<int>(w_slot(i)) >= genus) throw IndexError("w" + std::to_string(i) + " is not a variable here");
  return first[w_slot(i)];
}

const MPoly& SigmaRat::partial(int i, int j) const {
  if (static_cast<int>(std::max(w_slot(i), w_slot(j))) >= genus)
    throw IndexError("sigma partial outside the genus");
  return second[w_slot(i)][w_slot(j)];
}

SigmaRat sigma_rational(int g) {
  SigmaRat s;
  s.genus = g;
  switch (g) {
    case 1: s.sigma = V(Var::w1); break;
    case 2: s.sigma = parse_poly("-w3 + w1^3/3"); break;
    case 3: s.sigma = parse_poly("w1*w5 - w3^2 - w1^3*w3/3 + w1^6/45"); break;
    default: throw IncompatibleGenus("rational sigma exists for genus 1, 2, 3 only");
  }
  for (int i = 0; i < g; ++i) {
    s.first[static_cast<std::size_t>(i)] = s.sigma.derivative(w_var(2 * i + 1));
    for (int j = 0; j < g; ++j)
      s.second[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          s.first[static_cast<std::size_t>(i)].derivative(w_var(2 * j + 1));
  }
  return s;
}

RatFn xi_closed_form() { return R("w3^2/w1 + w1^2*w3/3 - w1^5/45"); }

UVPair uv_closed_form() {
  const SigmaRat s = sigma_rational(3);
  const std::vector<std::pair<Var, RatFn>> on_divisor = {{Var::w5, xi_closed_form()}};
  const RatFn s1 = compose_rational(s.partial(1), on_divisor);
  const RatFn s3 = compose_rational(s.partial(3), on_divisor);
  const RatFn s5 = compose_rational(s.partial(5), on_divisor);
  return {to_xt(RatFn(-2L) * s3 / s1), to_xt(RatFn(-2L) * s5 / s1)};
}

UVPair printed_uv() { return {R("6*x*(x^3 + 6*t)/(x^3 - 3*t)^2"), R("-18*x^2/(x^3 - 3*t)^2")}; }

VerifyReport verify_sigma_limit(const UVPair& printed) {
  return run_check("sec8-uv", "Section 8 rational limit: sigma, xi, U, V", [&](VerifyReport& r) {
    const SigmaRat s = sigma_rational(3);
    const std::array<std::pair<std::array<int, 2>, const char*>, 8> displays = {{
        {{1, 0}, "w5 - w1^2*w3 + 2*w1^5/15"},
        {{3, 0}, "-2*w3 - w1^3/3"},
        {{5, 0}, "w1"},
        {{1, 1}, "-2*w1*w3 + 2*w1^4/3"},
        {{1, 3}, "-w1^2"},
        {{1, 5}, "1"},
        {{3, 3}, "-2"},
        {{3, 5}, "0"},
    }};
    for (const auto& [ij, text] : displays) {
      const auto [i, j] = ij;
      const MPoly& p = j == 0 ? s.partial(i) : s.partial(i, j);
      const std::string name = "sigma" + std::to_string(i) + (j == 0 ? "" : std::to_string(j));
      r.add(name + " display", p - parse_poly(text));
    }

    const RatFn xi = xi_closed_form();
    const std::vector<std::pair<Var, RatFn>> on_divisor = {{Var::w5, xi}};
    const RatFn s1 = compose_rational(s.partial(1), on_divisor);
    const RatFn s5 = compose_rational(s.partial(5), on_divisor);
    r.add("sigma(w1, w3, xi)", compose_rational(s.sigma, on_divisor));
    r.add("sigma5 on the divisor = w1", s5 - RatFn(V(Var::w1)));
    r.add("xi_w1 sigma5 + sigma1 on the divisor", xi.derivative(Var::w1) * s5 + s1);

    const UVPair uv = uv_closed_form();
    r.add("U = -2 sigma3/sigma1", uv.U - printed.U);
    r.add("V = -2 sigma5/sigma1", uv.V - printed.V);
    const RatFn F2 = to_xt(F_in_w(2).compose(on_divisor));
    const RatFn F4 = to_xt(F_in_w(4).compose(on_divisor));
    r.add("U = 4 F2", RatFn(4L) * F2 - printed.U);
    r.add("V = 2(F4 - F2^2)", RatFn(2L) * (F4 - F2 * F2) - printed.V);
  });
}

VerifyReport verify_sigma_limit() { return verify_sigma_limit(printed_uv()); }

VerifyReport verify_rational_kdv(const RationalKdVCoefficients& k) {
  return run_check("thm-8.1", "Theorem 8.1", [&](VerifyReport& r) {
    const UVPair uv = printed_uv();
    add_kdv_residuals(r, "U", uv.U, uv.V, k);
  });
}

VerifyReport verify_rational_kdv() { return verify_rational_kdv(RationalKdVCoefficients{}); }

UVPair genus2_DE() {
  const SigmaRat s = sigma_rational(2);
  const RatFn sigma(s.sigma), s1(s.partial(1)), s3(s.partial(3));
  const RatFn s11(s.partial(1, 1)), s13(s.partial(1, 3));
  const RatFn sq = sigma * sigma;
  return {to_xt(RatFn(2L) * (s1 * s1 - s11 * sigma) / sq), to_xt(RatFn(2L) * (s1 * s3 - s13 * sigma) / sq)};
}

VerifyReport verify_genus2_limit(const UVPair& printed) {
  return run_check("sec8-genus2", "Section 8 genus-2 comparison D = U, E = V", [&](VerifyReport& r) {
    const SigmaRat s = sigma_rational(2);
    r.add("sigma1 display", s.partial(1) - parse_poly("w1^2"));
    r.add("sigma3 display", s.partial(3) - parse_poly("-1"));
    r.add("sigma11 display", s.partial(1, 1) - parse_poly("2*w1"));
    r.add("sigma13 display", s.partial(1, 3));
    const UVPair de = genus2_DE();
    r.add("D = U", de.U - printed.U);
    r.add("E = V", de.V - printed.V);
    add_kdv_residuals(r, "D", de.U, de.V, RationalKdVCoefficients{});
  });
}

VerifyReport verify_genus2_limit() { return verify_genus2_limit(printed_uv()); }

PhiRingElem::PhiRingElem(std::vector<RatFn> c) {
  const MPoly w3 = V(Var::w3), w5 = V(Var::w5);
  const RatFn r3(w3.scaled(Rat(15))), r0((w3 * w3).scaled(Rat(45))), r1(w5.scaled(Rat(-45)));
  // phi^6 = 15 phi^3 w3 + 45 w3^2 - 45 phi w5
  for (std::size_t k = c.size(); k-- > 6;) {
    if (c[k].is_zero()) continue;
    c[k - 3] += r3 * c[k];
    c[k - 5] += r1 * c[k];
    c[k - 6] += r0 * c[k];
  }
  for (std::size_t k = 0; k < 6 && k < c.size(); ++k) c_[k] = std::move(c[k]);
}

const MPoly& PhiRingElem::modulus() {
  static const MPoly m = parse_poly("phi^6 - 15*phi^3*w3 - 45*w3^2 + 45*phi*w5");
  return m;
}

bool PhiRingElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const RatFn& x) { return x.is_zero(); });
}

RatFn PhiRingElem::to_ratfn() const {
  RatFn out;
  for (std::size_t k = 0; k < 6; ++k)
    if (!c_[k].is_zero()) out += c_[k] * RatFn(V(Var::phi, static_cast<unsigned>(k)));
  return out;
}

PhiRingElem operator+(const PhiRingElem& lhs, const PhiRingElem& rhs) {
  std::vector<RatFn> c(6);
  for (std::size_t k = 0; k < 6; ++k) c[k] = lhs.c_[k] + rhs.c_[k];
  return PhiRingElem(std::move(c));
}

PhiRingElem operator-(const PhiRingElem& lhs, const PhiRingElem& rhs) {
  std::vector<RatFn> c(6);
  for (std::size_t k = 0; k < 6; ++k) c[k] = lhs.c_[k] - rhs.c_[k];
  return PhiRingElem(std::move(c));
}

PhiRingElem operator*(const PhiRingElem& lhs, const PhiRingElem& rhs) {
  std::vector<RatFn> c(11);
  for (std::size_t i = 0; i < 6; ++i) {
    if (lhs.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 6; ++j)
      if (!rhs.c_[j].is_zero()) c[i + j] += lhs.c_[i] * rhs.c_[j];
  }
  return PhiRingElem(std::move(c));
}

bool operator==(const PhiRingElem& lhs, const PhiRingElem& rhs) { return (lhs - rhs).is_zero(); }

PhiRingElem phi_reduce(const MPoly& p) {
  std::vector<RatFn> c;
  for (auto& coeff : p.coefficients(Var::phi)) c.emplace_back(std::move(coeff));
  return PhiRingElem(std::move(c));
}

PhiRingElem phi_reduce(const std::vector<RatFn>& coefficients) { return PhiRingElem(coefficients); }

std::pair<PhiRingElem, PhiRingElem> appendix_F(int i) {
  SigmaLocal local;
  const SFrac f = local.F(i);
  return {f.num, local.s_pow(f.k)};
}

RatFn appendix_F_ratfn(int i) { return rename(F_in_w(i), {{Var::w1, Var::phi}}); }

AppendixForms printed_appendix_forms() {
  return {
      {R("5*(phi^3 + 6*w3)"), R("15*(-phi^3*w3 + 15*phi*w5 - 15*w3^2)"),
       R("-15*w5^2 - 195*phi^2*w3*w5 + 8*phi^5*w5 + 135*phi*w3^3 + 63*phi^4*w3^2"),
       R("-15*phi*(25*phi^2*w5^2 - 45*phi*w3^2*w5 - 15*phi^4*w3*w5 + 27*w3^4 + 18*phi^3*w3^3)")},
      {R("2*(2*phi^5 - 15*phi^2*w3 + 15*w5)"),
       R("4*(-8*phi^5*w5 + 27*phi^4*w3^2 - 30*phi^2*w3*w5 + 15*w5^2)"),
       R("3*(5*w5^3 + 165*phi^2*w3*w5^2 + 14*phi^5*w5^2 - 585*phi*w3^3*w5 - 111*phi^4*w3^2*w5"
         " + 405*w3^5 + 189*phi^3*w3^4)"),
       R("2*(15*w5^4 - 4380*phi^2*w3*w5^3 - 208*phi^5*w5^3 + 28620*phi*w3^3*w5^2"
         " + 3042*phi^4*w3^2*w5^2 - 24300*w3^5*w5 - 11583*phi^3*w3^4*w5 + 2187*phi^2*w3^6"
         " + 729*phi^5*w3^5)")},
  };
}

VerifyReport verify_appendix_F(const AppendixForms& printed) {
  return run_check("app-A-F", "Appendix A, F_i = N_i/K_i modulo Eq. (rel)", [&](VerifyReport& r) {
    SigmaLocal local;
    const std::array<int, 4> index = {2, 4, 5, 7};
    for (std::size_t j = 0; j < 4; ++j) {
      const SFrac f = local.F(index[j]);
      const RatFn& N = printed.numerators[j];
      const RatFn& K = printed.denominators[j];
      // f.num / s^k = (N.num K.den) / (N.den K.num)
      const PhiRingElem lhs = f.num * phi_reduce(N.den() * K.num());
      const PhiRingElem rhs = phi_reduce(N.num() * K.den()) * local.s_pow(f.k);
      r.add("F" + std::to_string(index[j]) + " K" + std::to_string(index[j]) + " - N" + std::to_string(index[j]),
            (lhs - rhs).to_ratfn());
    }
  });
}

VerifyReport verify_appendix_F() { return verify_appendix_F(printed_appendix_forms()); }

VerifyReport verify_ratc(const FlowTable& flow_I, const FlowTable& flow_II) {
  return run_check("thm-A.1", "Theorem A.1", [&](VerifyReport& r) {
    SigmaLocal local;
    const MPoly& rel = PhiRingElem::modulus();
    const SigmaRat s = sigma_rational(3);
    auto at_phi = [](const MPoly& p) { return rename(p, {{Var::w1, Var::phi}}); };

    // Implicit derivatives of phi, as printed, against the sextic and against -sigma_w/sigma1.
    const std::array<std::pair<Var, RatFn>, 2> printed_dphi = {
        std::pair{Var::w3, R("(15*phi^3 + 90*w3)/(6*phi^5 - 45*phi^2*w3 + 45*w5)")},
        std::pair{Var::w5, R("-45*phi/(6*phi^5 - 45*phi^2*w3 + 45*w5)")}};
    for (const auto& [w, dphi] : printed_dphi) {
      const std::string name = w == Var::w3 ? "phi_t" : "phi_tau";
      r.add(name + " = -rel_w/rel_phi",
            dphi.num() * rel.derivative(Var::phi) + dphi.den() * rel.derivative(w));
      const MPoly sw = at_phi(w == Var::w3 ? s.partial(3) : s.partial(5));
      r.add(name + " = -sigma_w/sigma1 mod rel",
            phi_reduce(dphi.num() * at_phi(s.partial(1)) + dphi.den() * sw).to_ratfn());
    }

    std::array<SFrac, 4> G = {local.F(2), local.F(4), local.F(5), local.F(7)};
    const std::vector<std::pair<Var, RatFn>> flat = {{Var::y4, RatFn()},  {Var::y6, RatFn()},
                                                     {Var::y8, RatFn()},  {Var::y10, RatFn()},
                                                     {Var::y12, RatFn()}, {Var::y14, RatFn()}};
    for (const auto* table : {&flow_I, &flow_II}) {
      const Var w = table == &flow_I ? Var::w3 : Var::w5;
      const std::string sys = table == &flow_I ? "(I) d/dt " : "(II) d/dtau ";
      for (std::size_t j = 0; j < 4; ++j) {
        const RatFn rhs = table->rhs[j].compose(flat);
        if (!rhs.is_polynomial()) throw MalformedInput("flow right-hand side is not polynomial at y = 0");
        const MPoly p = rhs.num().scaled(1 / rhs.den().constant_value());
        const SFrac lhs = local.derive(G[j], w);
        r.add(sys + std::string(var_name(kUVars[j])), local.difference(lhs, local.evaluate(p, G)).to_ratfn());
      }
    }
  });
}

VerifyReport verify_ratc() { return verify_ratc(flow_table(Flow::I), flow_table(Flow::II)); }

PSeries phi_series_example1(int order) {
  if (order < 2) throw MalformedInput("the expansion needs order >= 2");
  const MPoly rel = PhiRingElem::modulus().compose({{Var::w3, V(Var::t)}, {Var::w5, MPoly(1)}});
  return series_newton_solve(rel, Var::phi, Var::t, order, PSeries(Var::t, {Rat(0), Rat(0), Rat(1)}, 2));
}

SeriesCoefficients printed_example1() { return {{2, Rat(1)}, {7, Rat(1, 3)}, {12, Rat(14, 45)}}; }

VerifyReport verify_example1(const SeriesCoefficients& printed) {
  return run_check("ex-A.1", "Appendix A, Example 1", [&](VerifyReport& r) {
    if (printed.empty()) throw MalformedInput("no coefficients to compare");
    const int order = printed.rbegin()->first;
    const PSeries phi = phi_series_example1(order);
    for (int k = 0; k <= order; ++k) {
      const auto it = printed.find(k);
      const Rat expected = it == printed.end() ? Rat(0) : it->second;
      r.add("coefficient of t^" + std::to_string(k), MPoly(phi[k] - expected));
    }
    const MPoly rel = PhiRingElem::modulus().compose({{Var::w3, V(Var::t)}, {Var::w5, MPoly(1)}});
    r.add("rel(phi(t), t, 1) mod t^" + std::to_string(order + 1), evaluate_series(rel, Var::phi, phi).to_poly());
  });
}

VerifyReport verify_example1() { return verify_example1(printed_example1()); }

MPoly example3_modulus() { return parse_poly("q^6 - 15*q^3 - 45"); }

AlgNum algnum_of(const RatFn& f) {
  const MPoly m = example3_modulus();
  const AlgNum num = AlgNum::from_mpoly(m, f.num(), Var::q);
  const AlgNum den = AlgNum::from_mpoly(m, f.den(), Var::q);
  return num * algnum_invert(den);
}

Example3Table example3_values() {
  const std::vector<std::pair<Var, RatFn>> at = {
      {Var::phi, RatFn(V(Var::q) * V(Var::theta))}, {Var::w3, RatFn(V(Var::theta, 3))}, {Var::w5, RatFn()}};
  Example3Table out{
      {ThetaMonomial{algnum_of(RatFn()), 0}, ThetaMonomial{algnum_of(RatFn()), 0},
       ThetaMonomial{algnum_of(RatFn()), 0}, ThetaMonomial{algnum_of(RatFn()), 0}},
      algnum_of(RatFn()), algnum_of(RatFn())};
  const std::array<int, 4> index = {2, 4, 5, 7};
  for (std::size_t j = 0; j < 4; ++j) out.F[j] = theta_monomial(appendix_F_ratfn(index[j]).compose(at));
  const SigmaRat s = sigma_rational(3);
  out.sigma1_w0 = algnum_of(RatFn(s.partial(1).compose({{Var::w1, V(Var::q)}, {Var::w3, MPoly(1)}, {Var::w5, MPoly()}})));
  out.relation = theta_monomial(RatFn(PhiRingElem::modulus()).compose(at)).coeff;
  return out;
}

Example3Printed printed_example3() {
  return {{R("q/6"), R("-5*(q^3 + 15)/(36*q^4)"), R("q/9"), R("-5*(2*q^3 + 3)/(54*q*(q^3 + 3))")},
          {-2, -4, -5, -7},
          R("q^2*(2*q^3 - 15)/15")};
}

VerifyReport verify_example3(const Example3Printed& printed) {
  return run_check("ex-A.3", "Appendix A, Example 3", [&](VerifyReport& r) {
    const Example3Table table = example3_values();
    r.add("sextic at (q theta, theta^3, 0)", table.relation.to_mpoly(Var::q));
    const std::array<int, 4> index = {2, 4, 5, 7};
    for (std::size_t j = 0; j < 4; ++j) {
      const std::string name = "F" + std::to_string(index[j]);
      r.add(name + " coefficient", (table.F[j].coeff - algnum_of(printed.coeffs[j])).to_mpoly(Var::q));
      r.add_condition(name + " power of theta", table.F[j].theta_exponent == printed.theta_exponents[j],
                      "theta^" + std::to_string(table.F[j].theta_exponent) + ", expected theta^" +
                          std::to_string(printed.theta_exponents[j]));
    }
    const AlgNum printed_sigma1 = algnum_of(printed.sigma1_w0);
    r.add("sigma1(w0)", (table.sigma1_w0 - printed_sigma1).to_mpoly(Var::q));
    r.add_condition("sigma1(w0) nonzero", !printed_sigma1.is_zero(), "sigma1(w0) vanishes");
  });
}

VerifyReport verify_example3() { return verify_example3(printed_example3()); }

}  // namespace hekdv
