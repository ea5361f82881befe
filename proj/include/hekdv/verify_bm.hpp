#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "hekdv/derivation.hpp"
#include "hekdv/ratfn.hpp"
#include "hekdv/report.hpp"

namespace hekdv {

enum class Flow { I, II, T1, T3 };

std::string flow_name(Flow flow);
/// Accepts "I", "II", "T1", "T3".
std::optional<Flow> parse_flow(const std::string& name);

inline constexpr std::array<Var, 4> kUVars = {Var::u2, Var::u4, Var::u5, Var::u7};

/// Right-hand sides of a flow on (u2, u4, u5, u7), genus 3.
struct FlowTable {
  Flow flow = Flow::I;
  std::array<RatFn, 4> rhs;  // images of u2, u4, u5, u7
};

FlowTable flow_table(Flow flow);

/// Weight added by the flow: 3 for I and T3, 5 for II, 1 for T1.
int flow_weight_shift(Flow flow);

/// The field derivation generating the flow: L3, L5, T1 or T3.
Derivation flow_derivation(Flow flow, const FieldPtr& field);

/// Certifies each table entry against the derivation applied to the pulled
/// back coordinate, plus the weight audit of every entry.
VerifyReport verify_flow_table(const FlowTable& table);
VerifyReport verify_flow_table(Flow flow);

struct FirstIntegrals {
  MPoly H12;
  MPoly H14;
};

/// H12 = M3(u) + y12 and H14 = N~3(u) + y14.
FirstIntegrals first_integrals();

/// dH/dt along every flow, for both integrals: 8 identities in (u, y).
VerifyReport verify_first_integrals(const FirstIntegrals& h);
VerifyReport verify_first_integrals();

/// Constant antisymmetric bracket on (u2, u4, u5, u7).
struct PoissonStructure {
  std::array<std::array<Rat, 4>, 4> table{};

  /// Sets {u_i, u_j} = value and {u_j, u_i} = -value.
  void set(Var ui, Var uj, const Rat& value);
  Rat operator()(std::size_t i, std::size_t j) const { return table[i][j]; }
};

/// {u2,u7} = -1/2, {u4,u5} = -1; the bracket of system (I).
PoissonStructure poisson_structure_I();
/// {u2,u7} = 1/2, {u4,u5} = 1; the bracket of system (II).
PoissonStructure poisson_structure_II();

RatFn poisson_bracket(const RatFn& f, const RatFn& g, const PoissonStructure& s);

/// I = {., H12} under structure I, II = {., H14} under structure II, and
/// {H12, H14} = 0 under both.
VerifyReport verify_hamiltonian_form(const PoissonStructure& s1, const PoissonStructure& s2,
                                     const FirstIntegrals& h);
VerifyReport verify_hamiltonian_form();

/// X1 X2 * pullback(T1 entry) + pullback(II entry) = 0 for every coordinate.
VerifyReport verify_t1_cross_consistency();

}  // namespace hekdv
