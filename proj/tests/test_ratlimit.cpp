#include <doctest.h>

#include "hekdv/errors.hpp"
#include "hekdv/ratlimit.hpp"

using namespace hekdv;

namespace {

// Complete homogeneous h_0..h_n in w_i = p_i / i with even p_i = 0, from
// exp(sum w_k z^k): h_n = (1/n) sum_k k w_k h_{n-k}.
std::vector<MPoly> complete_h(int n) {
  std::vector<MPoly> h{MPoly(1)};
  for (int m = 1; m <= n; ++m) {
    MPoly sum;
    for (int k = 1; k <= m; k += 2)
      if (k <= 5) sum += V(w_var(k)).scaled(Rat(k)) * h[static_cast<std::size_t>(m - k)];
    h.push_back(sum.scaled(Rat(1, m)));
  }
  return h;
}

MPoly det3(const std::array<std::array<MPoly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST_CASE("rational sigma displays") {
  const SigmaRat s3 = sigma_rational(3);
  CHECK(s3.partial(3) == parse_poly("-2*w3 - w1^3/3"));
  CHECK(s3.partial(3, 5).is_zero());
  CHECK(s3.partial(1, 5) == MPoly(1));
  CHECK(s3.partial(3, 3) == MPoly(-2));
  CHECK(s3.partial(1) == parse_poly("w5 - w1^2*w3 + 2*w1^5/15"));
  const SigmaRat s2 = sigma_rational(2);
  CHECK(s2.partial(1) == parse_poly("w1^2"));
  CHECK(s2.partial(3) == MPoly(-1));
  CHECK(sigma_rational(1).sigma == V(Var::w1));
  CHECK_THROWS_AS(sigma_rational(4), IncompatibleGenus);
  CHECK_THROWS_AS(s2.partial(5), IndexError);
  CHECK_THROWS_AS(s3.partial(2), IndexError);
}

TEST_CASE("rational sigma agrees with Jacobi-Trudi Schur functions") {
  const auto h = complete_h(5);
  // s_(2,1) = h2 h1 - h3
  CHECK(sigma_rational(2).sigma == h[2] * h[1] - h[3]);
  // s_(3,2,1) = det [h3 h4 h5; h1 h2 h3; 0 1 h1]
  const MPoly s321 = det3({{{h[3], h[4], h[5]}, {h[1], h[2], h[3]}, {MPoly(), MPoly(1), h[1]}}});
  CHECK(sigma_rational(3).sigma == s321);
}

TEST_CASE("xi and the closed-form U, V") {
  const RatFn xi = xi_closed_form();
  const SigmaRat s = sigma_rational(3);
  CHECK(compose_rational(s.sigma, {{Var::w5, xi}}).is_zero());
  const RatFn at = xi.compose({{Var::w1, RatFn(1L)}, {Var::w3, RatFn()}});
  CHECK(at == RatFn(Rat(-1, 45)));

  const UVPair uv = uv_closed_form();
  const UVPair printed = printed_uv();
  CHECK(uv.U == printed.U);
  CHECK(uv.V == printed.V);
  const auto value = [](Var v) { return v == Var::x ? 1.0 : 0.0; };
  CHECK(printed.U.evaluate<double>(value) == doctest::Approx(6.0));

  const VerifyReport r = verify_sigma_limit();
  INFO(r.summary());
  CHECK(r.passed());

  UVPair wrong = printed;
  wrong.U = parse_ratfn("6*x*(x^3 + 5*t)/(x^3 - 3*t)^2");
  CHECK_FALSE(verify_sigma_limit(wrong).passed());
}

TEST_CASE("rational KdV hierarchy") {
  const VerifyReport r = verify_rational_kdv();
  INFO(r.summary());
  CHECK(r.passed());
  CHECK(r.residuals.size() == 3);

  RationalKdVCoefficients k;
  k.a2 = -5;
  const VerifyReport m = verify_rational_kdv(k);
  CHECK_FALSE(m.passed());
  CHECK(m.failures() == 1);
  k = {};
  k.c1 = -1;
  CHECK_FALSE(verify_rational_kdv(k).passed());
}

TEST_CASE("genus-2 comparison") {
  const UVPair de = genus2_DE();
  CHECK(de.U == printed_uv().U);
  CHECK(de.V == printed_uv().V);
  const VerifyReport r = verify_genus2_limit();
  INFO(r.summary());
  CHECK(r.passed());

  UVPair wrong = printed_uv();
  wrong.V = parse_ratfn("18*x^2/(x^3 - 3*t)^2");
  CHECK_FALSE(verify_genus2_limit(wrong).passed());
}

TEST_CASE("reduction modulo the sextic") {
  const PhiRingElem six = phi_reduce(V(Var::phi, 6));
  CHECK(six.to_ratfn() == parse_ratfn("15*phi^3*w3 + 45*w3^2 - 45*phi*w5"));
  const PhiRingElem seven = phi_reduce(V(Var::phi, 7));
  CHECK(seven == phi_reduce(parse_poly("15*phi^4*w3 + 45*phi*w3^2 - 45*phi^2*w5")));
  CHECK(phi_reduce(MPoly(1)).to_ratfn() == RatFn(1L));
  CHECK(phi_reduce(PhiRingElem::modulus()).is_zero());
  CHECK(phi_reduce(PhiRingElem::modulus() * parse_poly("phi^3 + w5")).is_zero());

  // Reduction is a ring map.
  const MPoly a = parse_poly("phi^5 + w3*phi^2 - 2"), b = parse_poly("3*phi^4 - w5*phi + w3");
  CHECK(phi_reduce(a) * phi_reduce(b) == phi_reduce(a * b));
  CHECK(phi_reduce(a) + phi_reduce(b) == phi_reduce(a + b));

  // Coefficient-list input over Q(w3, w5).
  const PhiRingElem c = phi_reduce(std::vector<RatFn>{RatFn(), RatFn(), RatFn(), RatFn(), RatFn(), RatFn(),
                                                      parse_ratfn("1/w5")});
  CHECK(c.to_ratfn() == parse_ratfn("(15*phi^3*w3 + 45*w3^2 - 45*phi*w5)/w5"));
}

TEST_CASE("F_i against the quotient forms N_i/K_i") {
  const VerifyReport r = verify_appendix_F();
  INFO(r.summary());
  CHECK(r.passed());
  CHECK(r.residuals.size() == 4);

  // F2 = -sigma3/(2 sigma1) without any reduction needed.
  const auto [n2, d2] = appendix_F(2);
  CHECK((n2 * phi_reduce(parse_poly("2*(2*phi^5 - 15*phi^2*w3 + 15*w5)")) -
         phi_reduce(parse_poly("5*(phi^3 + 6*w3)")) * d2)
            .is_zero());
  CHECK_THROWS_AS(appendix_F(3), IndexError);

  AppendixForms wrong = printed_appendix_forms();
  wrong.denominators[2] = parse_ratfn(
      "3*(5*w5^3 + 166*phi^2*w3*w5^2 + 14*phi^5*w5^2 - 585*phi*w3^3*w5 - 111*phi^4*w3^2*w5"
      " + 405*w3^5 + 189*phi^3*w3^4)");
  const VerifyReport m = verify_appendix_F(wrong);
  CHECK_FALSE(m.passed());
  CHECK(m.failures() == 1);

  wrong = printed_appendix_forms();
  wrong.numerators[3] =
      parse_ratfn("15*phi*(25*phi^2*w5^2 - 45*phi*w3^2*w5 - 15*phi^4*w3*w5 + 27*w3^4 + 18*phi^3*w3^3)");
  CHECK_FALSE(verify_appendix_F(wrong).passed());
}

TEST_CASE("flows (I), (II) at the rational limit") {
  const VerifyReport r = verify_ratc();
  INFO(r.summary());
  CHECK(r.passed());
  CHECK(r.residuals.size() == 12);

  FlowTable I = flow_table(Flow::I);
  I.rhs[2] = parse_ratfn("-35*u2^4-42*u2^2*u4-4*u4^2-2*y4*(5*u2^2+u4)+4*y6*u2-y8");
  const VerifyReport m = verify_ratc(I, flow_table(Flow::II));
  CHECK_FALSE(m.passed());
  CHECK(m.failures() == 1);

  FlowTable II = flow_table(Flow::II);
  II.rhs[0] = parse_ratfn("u2*u5+u7");
  CHECK_FALSE(verify_ratc(flow_table(Flow::I), II).passed());
}

TEST_CASE("expansion of phi(t, 1)") {
  const PSeries phi = phi_series_example1(12);
  for (int k = 0; k <= 12; ++k) {
    CAPTURE(k);
    if (k == 2) CHECK(phi[k] == 1);
    else if (k == 7) CHECK(phi[k] == Rat(1, 3));
    else if (k == 12) CHECK(phi[k] == Rat(14, 45));
    else CHECK(phi[k] == 0);
  }
  const PSeries low = phi_series_example1(6);
  CHECK(low.to_poly() == V(Var::t, 2));
  CHECK_THROWS_AS(phi_series_example1(1), MalformedInput);

  const VerifyReport r = verify_example1();
  INFO(r.summary());
  CHECK(r.passed());
  SeriesCoefficients wrong = printed_example1();
  wrong[12] = Rat(13, 45);
  CHECK_FALSE(verify_example1(wrong).passed());
}

TEST_CASE("values in Q[q]/(q^6 - 15 q^3 - 45)") {
  const Example3Table table = example3_values();
  CHECK(table.relation.is_zero());
  CHECK(table.F[0].coeff == algnum_of(parse_ratfn("q/6")));
  CHECK(table.F[0].theta_exponent == -2);
  CHECK(table.F[3].coeff == algnum_of(parse_ratfn("-5*(2*q^3 + 3)/(54*q*(q^3 + 3))")));
  CHECK(table.F[3].theta_exponent == -7);

  // 1/q = (q^5 - 15 q^2)/45 in the quotient ring.
  CHECK(algnum_of(parse_ratfn("1/q")) == algnum_of(parse_ratfn("(q^5 - 15*q^2)/45")));
  CHECK_THROWS_AS(algnum_of(RatFn(MPoly(1), example3_modulus())), ZeroDivisor);

  const VerifyReport r = verify_example3();
  INFO(r.summary());
  CHECK(r.passed());
  Example3Printed wrong = printed_example3();
  wrong.coeffs[0] = parse_ratfn("q/7");
  CHECK_FALSE(verify_example3(wrong).passed());
  wrong = printed_example3();
  wrong.theta_exponents[2] = -4;
  CHECK_FALSE(verify_example3(wrong).passed());
}
