#include "hekdv/weights.hpp"

#include <string>

#include "hekdv/errors.hpp"

namespace hekdv {

WeightTable::WeightTable(std::initializer_list<std::pair<Var, int>> weights) {
  for (const auto& [v, w] : weights) set(v, w);
}

WeightTable WeightTable::standard(int genus) {
  if (genus < 1) throw ConfigError("genus must be positive");
  const int g = genus;
  WeightTable w{{Var::X1, 2},         {Var::X2, 2},         {Var::Y1, 2 * g + 1}, {Var::Y2, 2 * g + 1},
                {Var::a, 2},          {Var::b, 4},          {Var::c, 2 * g - 1},  {Var::d, 2 * g + 1},
                {Var::u2, 2},         {Var::u4, 4},         {Var::u5, 5},         {Var::u7, 7},
                {Var::w1, -1},        {Var::w3, -3},        {Var::w5, -5},        {Var::phi, -1},
                {Var::q, 0},          {Var::t, -3},         {Var::tau, -5},       {Var::s, 2},
                {Var::theta, -1},     {Var::x, -1}};
  for (int k = 4; k <= 14; k += 2) w.set(y_var(k), k);
  return w;
}

int WeightTable::operator[](Var v) const {
  const auto& w = weights_[index_of(v)];
  if (!w) throw ConfigError("no weight declared for symbol " + std::string(var_name(v)));
  return *w;
}

int monomial_weight(const Monomial& m, const WeightTable& w) {
  int total = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const unsigned e = m.exponent(i);
    if (e > 0) total += static_cast<int>(e) * w[var_at(i)];
  }
  return total;
}

WeightedDegree weighted_degree(const MPoly& p, const WeightTable& w) {
  if (p.is_zero()) return {WeightedDegree::Kind::Zero, 0};
  const int first = monomial_weight(p.leading_term().mono, w);
  WeightedDegree result{WeightedDegree::Kind::Homogeneous, first};
  for (const auto& t : p.terms())
    if (monomial_weight(t.mono, w) != first) result.kind = WeightedDegree::Kind::NotHomogeneous;
  return result;
}

WeightedDegree weighted_degree(const RatFn& f, const WeightTable& w) {
  const WeightedDegree n = weighted_degree(f.num(), w);
  if (n.kind != WeightedDegree::Kind::Homogeneous) return n;
  const WeightedDegree d = weighted_degree(f.den(), w);
  if (d.kind != WeightedDegree::Kind::Homogeneous) return {WeightedDegree::Kind::NotHomogeneous, 0};
  return {WeightedDegree::Kind::Homogeneous, n.value - d.value};
}

}  // namespace hekdv
