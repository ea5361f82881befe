#include "hekdv/verify_bm.hpp"

#include "hekdv/errors.hpp"
#include "hekdv/weights.hpp"

namespace hekdv {

namespace {

// Transcribed right-hand sides, in the order u2, u4, u5, u7.
constexpr std::array<const char*, 4> kTableI = {
    "-u5",
    "-2*u7",
    "-35*u2^4-42*u2^2*u4-3*u4^2-2*y4*(5*u2^2+u4)+4*y6*u2-y8",
    "-7*(3*u2^5+10*u2^3*u4+3*u2*u4^2)-10*y4*(u2^3+u2*u4)+2*y6*(3*u2^2+u4)-3*y8*u2+y10",
};

constexpr std::array<const char*, 4> kTableII = {
    "u2*u5-u7",
    "2*(u2*u7-u4*u5)",
    "u5^2+14*u2^5-28*u2^3*u4-18*u2*u4^2-8*y4*u2*u4+2*y6*(u2^2+u4)-2*y8*u2+y10",
    "-u5*u7+21*u2^6+35*u2^4*u4-21*u2^2*u4^2-3*u4^3+2*y4*(5*u2^4-u4^2)-2*y6*(3*u2^3-u2*u4)"
    "+y8*(3*u2^2-u4)-y10*u2",
};

constexpr std::array<const char*, 4> kTableT1 = {
    "(u2*u5-u7)/(u4-u2^2)",
    "2*(u2*u7-u4*u5)/(u4-u2^2)",
    "(u5^2+14*u2^5-28*u2^3*u4-18*u2*u4^2-8*y4*u2*u4+2*y6*(u2^2+u4)-2*y8*u2+y10)/(u4-u2^2)",
    "(-u5*u7+21*u2^6+35*u2^4*u4-21*u2^2*u4^2-3*u4^3+2*y4*(5*u2^4-u4^2)-2*y6*(3*u2^3-u2*u4)"
    "+y8*(3*u2^2-u4)-y10*u2)/(u4-u2^2)",
};

constexpr std::array<const char*, 4> kTableT3 = {
    "(2*u2*u7-u4*u5-u2^2*u5)/(u4-u2^2)",
    "2*(2*u2*u4*u5-u4*u7-u2^2*u7)/(u4-u2^2)",
    "(-2*u2*u5^2+7*u2^6+63*u2^4*u4-3*u2^2*u4^2-3*u4^3+2*y4*(5*u2^4+4*u2^2*u4-u4^2)-8*y6*u2^3"
    "+y8*(5*u2^2-u4)-2*y10*u2)/(u4-u2^2)",
    "(2*u2*u5*u7-21*u2^7-21*u2^5*u4-7*u2^3*u4^2-15*u2*u4^3-2*y4*(5*u2^5+3*u2*u4^2)"
    "+2*y6*(3*u2^4+u4^2)-y8*(3*u2^3+u2*u4)+y10*(u2^2+u4))/(u4-u2^2)",
};

std::array<RatFn, 4> parse_table(const std::array<const char*, 4>& rows) {
  std::array<RatFn, 4> out;
  for (std::size_t j = 0; j < 4; ++j) out[j] = parse_ratfn(rows[j]);
  return out;
}

std::string anchor_of(Flow flow) {
  switch (flow) {
    case Flow::I: return "Theorem 3.1 (I)";
    case Flow::II: return "Theorem 3.1 (II)";
    case Flow::T1: return "Proposition 5.4 (T1)";
    case Flow::T3: return "Proposition 5.4 (T3)";
  }
  throw InternalError("unknown flow");
}

std::string id_of(Flow flow) {
  switch (flow) {
    case Flow::I: return "thm-3.1-I";
    case Flow::II: return "thm-3.1-II";
    case Flow::T1: return "prop-5.4-T1";
    case Flow::T3: return "prop-5.4-T3";
  }
  throw InternalError("unknown flow");
}

// Derivative of f along the vector field given by the table.
RatFn along(const RatFn& f, const FlowTable& table) {
  RatFn out;
  for (std::size_t j = 0; j < 4; ++j) {
    const RatFn partial = f.derivative(kUVars[j]);
    if (!partial.is_zero()) out += partial * table.rhs[j];
  }
  return out;
}

}  // namespace

std::string flow_name(Flow flow) {
  switch (flow) {
    case Flow::I: return "I";
    case Flow::II: return "II";
    case Flow::T1: return "T1";
    case Flow::T3: return "T3";
  }
  throw InternalError("unknown flow");
}

std::optional<Flow> parse_flow(const std::string& name) {
  for (Flow f : {Flow::I, Flow::II, Flow::T1, Flow::T3})
    if (flow_name(f) == name) return f;
  return std::nullopt;
}

FlowTable flow_table(Flow flow) {
  FlowTable t;
  t.flow = flow;
  switch (flow) {
    case Flow::I: t.rhs = parse_table(kTableI); break;
    case Flow::II: t.rhs = parse_table(kTableII); break;
    case Flow::T1: t.rhs = parse_table(kTableT1); break;
    case Flow::T3: t.rhs = parse_table(kTableT3); break;
  }
  return t;
}

int flow_weight_shift(Flow flow) {
  switch (flow) {
    case Flow::I: return 3;
    case Flow::II: return 5;
    case Flow::T1: return 1;
    case Flow::T3: return 3;
  }
  throw InternalError("unknown flow");
}

Derivation flow_derivation(Flow flow, const FieldPtr& field) {
  switch (flow) {
    case Flow::I: return make_derivation(DerivationKind::LLow, field);
    case Flow::II: return make_derivation(DerivationKind::LHigh, field);
    case Flow::T1: return make_derivation(DerivationKind::T1, field);
    case Flow::T3: return make_derivation(DerivationKind::T3, field);
  }
  throw InternalError("unknown flow");
}

VerifyReport verify_flow_table(const FlowTable& table) {
  return run_check(id_of(table.flow), anchor_of(table.flow), [&](VerifyReport& r) {
    const FieldPtr field = genus3_field();
    const Derivation d = flow_derivation(table.flow, field);
    const WeightTable w = WeightTable::standard(3);
    for (std::size_t j = 0; j < 4; ++j) {
      const std::string u(var_name(kUVars[j]));
      const SymSqElem lhs = derive(d, pullback_u(RatFn(V(kUVars[j])), field));
      r.add(flow_name(table.flow) + " " + u, lhs - pullback_u(table.rhs[j], field));
      const WeightedDegree wd = weighted_degree(table.rhs[j], w);
      const int expected = w[kUVars[j]] + flow_weight_shift(table.flow);
      r.add_condition("weight of " + u + " entry", wd.homogeneous() && wd.value == expected,
                      wd.homogeneous() ? "weight " + std::to_string(wd.value) + ", expected " + std::to_string(expected)
                                       : "not weighted-homogeneous");
    }
  });
}

VerifyReport verify_flow_table(Flow flow) { return verify_flow_table(flow_table(flow)); }

FirstIntegrals first_integrals() {
  const MNPair mn = build_MN(3);
  return {abcd_to_u(mn.M) + V(Var::y12), abcd_to_u(mn.N_tilde) + V(Var::y14)};
}

VerifyReport verify_first_integrals(const FirstIntegrals& h) {
  return run_check("sec3-first-integrals", "Section 3 first integrals H12, H14", [&](VerifyReport& r) {
    for (Flow flow : {Flow::I, Flow::II, Flow::T1, Flow::T3}) {
      const FlowTable table = flow_table(flow);
      r.add(flow_name(flow) + " H12", along(RatFn(h.H12), table));
      r.add(flow_name(flow) + " H14", along(RatFn(h.H14), table));
    }
  });
}

VerifyReport verify_first_integrals() { return verify_first_integrals(first_integrals()); }

void PoissonStructure::set(Var ui, Var uj, const Rat& value) {
  std::size_t i = 4, j = 4;
  for (std::size_t k = 0; k < 4; ++k) {
    if (kUVars[k] == ui) i = k;
    if (kUVars[k] == uj) j = k;
  }
  if (i == 4 || j == 4 || i == j) throw MalformedInput("bracket entries need two distinct u coordinates");
  table[i][j] = value;
  table[j][i] = -value;
}

PoissonStructure poisson_structure_I() {
  PoissonStructure s;
  s.set(Var::u2, Var::u7, Rat(-1, 2));
  s.set(Var::u4, Var::u5, Rat(-1));
  return s;
}

PoissonStructure poisson_structure_II() {
  PoissonStructure s;
  s.set(Var::u2, Var::u7, Rat(1, 2));
  s.set(Var::u4, Var::u5, Rat(1));
  return s;
}

RatFn poisson_bracket(const RatFn& f, const RatFn& g, const PoissonStructure& s) {
  RatFn out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (sgn(s(i, j)) == 0) continue;
      const RatFn term = f.derivative(kUVars[i]) * g.derivative(kUVars[j]) -
                         f.derivative(kUVars[j]) * g.derivative(kUVars[i]);
      out += RatFn(MPoly(s(i, j))) * term;
    }
  }
  return out;
}

VerifyReport verify_hamiltonian_form(const PoissonStructure& s1, const PoissonStructure& s2,
                                     const FirstIntegrals& h) {
  return run_check("sec3-hamiltonian", "Section 3 Hamiltonian form and involution", [&](VerifyReport& r) {
    const FlowTable t1 = flow_table(Flow::I), t2 = flow_table(Flow::II);
    for (std::size_t j = 0; j < 4; ++j) {
      const RatFn u(V(kUVars[j]));
      const std::string name(var_name(kUVars[j]));
      r.add("I " + name + " = {" + name + ", H12}", t1.rhs[j] - poisson_bracket(u, RatFn(h.H12), s1));
      r.add("II " + name + " = {" + name + ", H14}", t2.rhs[j] - poisson_bracket(u, RatFn(h.H14), s2));
    }
    r.add("{H12, H14} structure I", poisson_bracket(RatFn(h.H12), RatFn(h.H14), s1));
    r.add("{H12, H14} structure II", poisson_bracket(RatFn(h.H12), RatFn(h.H14), s2));
  });
}

VerifyReport verify_hamiltonian_form() {
  return verify_hamiltonian_form(poisson_structure_I(), poisson_structure_II(), first_integrals());
}

VerifyReport verify_t1_cross_consistency() {
  return run_check("eq-newderia1", "T1 = -L5/(X1 X2)", [](VerifyReport& r) {
    const FieldPtr field = genus3_field();
    const FlowTable t1 = flow_table(Flow::T1), t2 = flow_table(Flow::II);
    const SymSqElem x1x2(field, V(Var::X1) * V(Var::X2));
    for (std::size_t j = 0; j < 4; ++j)
      r.add(std::string(var_name(kUVars[j])), x1x2 * pullback_u(t1.rhs[j], field) + pullback_u(t2.rhs[j], field));
  });
}

}  // namespace hekdv
