#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <utility>

#include "hekdv/mpoly.hpp"
#include "hekdv/ratfn.hpp"

namespace hekdv {

/// Integer grading of the symbols.
class WeightTable {
 public:
  WeightTable() = default;
  WeightTable(std::initializer_list<std::pair<Var, int>> weights);

  /// deg X = 2, deg Y = 2g+1, deg a,b,c,d = 2,4,2g-1,2g+1, deg u_i = i,
  /// deg y_i = i, deg w_k = -k (phi = w1, t = w3, tau = w5, x = w1,
  /// theta = -1), deg q = 0, deg s = 2.
  static WeightTable standard(int genus);

  void set(Var v, int w) { weights_[index_of(v)] = w; }
  bool has(Var v) const { return weights_[index_of(v)].has_value(); }
  /// Throws ConfigError for symbols without a weight.
  int operator[](Var v) const;

 private:
  std::array<std::optional<int>, kNumVars> weights_{};
};

struct WeightedDegree {
  enum class Kind { Homogeneous, NotHomogeneous, Zero };
  Kind kind = Kind::Zero;
  int value = 0;

  bool homogeneous() const { return kind == Kind::Homogeneous; }
  friend bool operator==(const WeightedDegree&, const WeightedDegree&) = default;
};

int monomial_weight(const Monomial& m, const WeightTable& w);

/// Common weight of all terms, NotHomogeneous if they differ, Zero for 0.
WeightedDegree weighted_degree(const MPoly& p, const WeightTable& w);

/// weight(num) - weight(den) when both are homogeneous.
WeightedDegree weighted_degree(const RatFn& f, const WeightTable& w);

}  // namespace hekdv
