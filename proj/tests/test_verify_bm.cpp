#include <doctest.h>

#include "hekdv/verify_bm.hpp"
#include "hekdv/weights.hpp"

using namespace hekdv;

TEST_CASE("flow tables are certified") {
  for (Flow flow : {Flow::I, Flow::II, Flow::T1, Flow::T3}) {
    const VerifyReport r = verify_flow_table(flow);
    INFO(flow_name(flow), ": ", r.summary());
    CHECK(r.passed());
    CHECK(r.residuals.size() == 8);
  }
}

TEST_CASE("flow table transcription") {
  const FlowTable t = flow_table(Flow::I);
  CHECK(t.rhs[0] == parse_ratfn("-u5"));
  CHECK(t.rhs[1] == parse_ratfn("-2*u7"));
  CHECK(flow_table(Flow::II).rhs[0] == parse_ratfn("u2*u5 - u7"));
  CHECK(flow_table(Flow::T1).rhs[0] == parse_ratfn("(u2*u5 - u7)/(u4 - u2^2)"));
  CHECK(parse_flow("T3") == Flow::T3);
  CHECK_FALSE(parse_flow("T2").has_value());
}

TEST_CASE("mutated tables fail") {
  FlowTable t = flow_table(Flow::I);
  // Flip the sign of -3 u4^2 in the u5 entry.
  t.rhs[2] = t.rhs[2] + RatFn(6 * V(Var::u4, 2));
  const VerifyReport r = verify_flow_table(t);
  CHECK_FALSE(r.passed());
  CHECK(r.failures() == 1);
  CHECK(r.summary().find("I u5") != std::string::npos);

  FlowTable t3 = flow_table(Flow::T3);
  t3.rhs[3] = t3.rhs[3] + parse_ratfn("u2*u4^3/(u4 - u2^2)");
  CHECK_FALSE(verify_flow_table(t3).passed());
}

TEST_CASE("first integrals") {
  const FirstIntegrals h = first_integrals();
  CHECK_FALSE(h.H12.contains(Var::y12));
  CHECK(h.H12.coefficient(Var::u5, 1).coefficient(Var::u7, 1) == MPoly(2));
  const MPoly lead = parse_poly("-u7^2 - u4*u5^2 + 2*u2*u5*u7 - 6*u2^7");
  for (const auto& t : lead.terms()) CHECK(h.H14.coefficient(Var::u7, t.mono[Var::u7]).terms().size() > 0);
  CHECK((h.H14 - lead).size() == h.H14.size() - lead.size());
  const WeightTable w = WeightTable::standard(3);
  CHECK(weighted_degree(h.H12, w).value == 12);
  CHECK(weighted_degree(h.H14, w).value == 14);

  const VerifyReport r = verify_first_integrals();
  INFO(r.summary());
  CHECK(r.passed());
  CHECK(r.residuals.size() == 8);

  FirstIntegrals bad = h;
  bad.H12 += V(Var::u2);
  CHECK_FALSE(verify_first_integrals(bad).passed());
}

TEST_CASE("Poisson structures") {
  const PoissonStructure s = poisson_structure_I();
  CHECK(poisson_bracket(RatFn(V(Var::u2)), RatFn(V(Var::u7)), s) == RatFn(Rat(-1, 2)));
  CHECK(poisson_bracket(RatFn(V(Var::u2)), RatFn(V(Var::u5)), s).is_zero());
  const RatFn f = parse_ratfn("u2^3*u5 + y4*u7^2 - u4");
  CHECK(poisson_bracket(f, f, s).is_zero());
  const RatFn g = parse_ratfn("u5*u4 + u2^2");
  CHECK(poisson_bracket(f, g, s) == -poisson_bracket(g, f, s));

  const VerifyReport r = verify_hamiltonian_form();
  INFO(r.summary());
  CHECK(r.passed());
  CHECK(r.residuals.size() == 10);

  PoissonStructure flipped = poisson_structure_I();
  flipped.set(Var::u2, Var::u7, Rat(1, 2));
  CHECK_FALSE(verify_hamiltonian_form(flipped, poisson_structure_II(), first_integrals()).passed());
}

TEST_CASE("T1 against L5") {
  const VerifyReport r = verify_t1_cross_consistency();
  INFO(r.summary());
  CHECK(r.passed());
}
