#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hekdv/curve.hpp"
#include "hekdv/verify_bm.hpp"

namespace hekdv {

using cplx = std::complex<double>;
using StateVec = Eigen::Matrix<cplx, 4, 1>;  // u2, u4, u5, u7

/// A point of C^4. Real trajectories keep zero imaginary parts and are
/// integrated as 4-dimensional real systems; complex ones as 8-dimensional.
struct SimState {
  double time = 0;
  StateVec u = StateVec::Zero();
  bool complex_mode = false;
};

/// Point (x, y) on Y^2 = Q_3(X).
struct CurvePoint {
  cplx x, y;
};

/// Numeric right-hand side of one flow and the two first integrals on a
/// fixed curve, compiled from the certified exact tables.
class FlowSystem {
 public:
  /// Throws ModeError unless `params` is a numeric genus-3 curve.
  FlowSystem(Flow flow, const CurveParams& params);

  Flow flow() const { return flow_; }
  const CurveParams& params() const { return params_; }
  double y12() const { return y12_; }
  double y14() const { return y14_; }

  template <class Scalar>
  Eigen::Matrix<Scalar, 4, 1> rhs(const Eigen::Matrix<Scalar, 4, 1>& u) const;

  /// H12(u), H14(u).
  std::array<cplx, 2> integrals(const StateVec& u) const;
  /// Sum of absolute term values of H12 and H14 at u; the rounding scale.
  std::array<double, 2> integral_magnitudes(const StateVec& u) const;

  /// T-flows have a pole on u4 = u2^2.
  bool has_pole() const { return flow_ == Flow::T1 || flow_ == Flow::T3; }

  struct Term {
    double coeff;
    std::array<unsigned, 4> exps;
  };
  struct Compiled {
    std::vector<Term> terms;
  };

 private:
  Flow flow_;
  CurveParams params_;
  double y12_ = 0, y14_ = 0;
  std::array<Compiled, 4> num_, den_;
  std::array<Compiled, 2> h_;
};

/// Relative seeding tolerance on y^2 = Q_3(x).
inline constexpr double kCurveTolerance = 1e-12;
/// Tolerance on |H12 - y12| and |H14 - y14|, relative to their rounding scale.
inline constexpr double kSeedTolerance = 1e-10;

/// u2 = (x1+x2)/2, u4 = (x1-x2)^2/4, u5 = (y1-y2)/(x1-x2), u7 = (y1+y2)/2.
/// Throws SeedError for off-curve points, x1 = x2, or x1 x2 = 0 when
/// `flow` is T1 or T3, and when the seeded H12, H14 miss y12, y14.
SimState seed_state(const CurveParams& params, const CurvePoint& p1, const CurvePoint& p2, Flow flow = Flow::I);

struct IntegratorSettings {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  std::size_t max_steps = 2'000'000;
  /// Singularity guard for T-flows: |u4 - u2^2| >= guard * |u4 - u2^2| at t = 0.
  double pole_guard = 1e-8;
};

struct Sample {
  double time;
  StateVec u;
  cplx H12, H14;
};

struct Trajectory {
  Flow flow = Flow::I;
  IntegratorSettings settings;
  bool complex_mode = false;
  std::vector<Sample> samples;
  std::size_t rejected_steps = 0;
  bool aborted = false;
  std::string abort_reason;

  const Sample& back() const { return samples.back(); }
  SimState final_state() const;
  /// max_t |H(t) - H(0)| / max(1, |H(0)|) for H12 and H14.
  std::array<double, 2> relative_drift() const;
};

/// Adaptive Dormand-Prince 5(4) with PI step control, sampling every accepted
/// step. A negative t_end integrates backwards. Step-size underflow (near the
/// pole of a T-flow) or the step limit stops the run with `aborted` set and
/// the samples computed so far.
Trajectory integrate(const FlowSystem& system, const SimState& s0, double t_end,
                     const IntegratorSettings& settings = {});

/// CSV with header time,u2,u4,u5,u7,H12,H14 (17 significant digits). Complex
/// trajectories append im_u2,im_u4,im_u5,im_u7,im_H12,im_H14.
void write_csv(const Trajectory& trajectory, std::ostream& os);

enum class FlowPair { T1T3, I_II };

struct CommuteResult {
  FlowPair pair = FlowPair::T1T3;
  double sigma = 0, tau = 0;
  StateVec a_after_b, b_after_a;  // Phi_A^sigma(Phi_B^tau(s0)), Phi_B^tau(Phi_A^sigma(s0))
  double discrepancy = 0;
  double scale = 1;  // max(1, |s0|)
  double bound = 0;  // 1e-8 * scale
  bool passed() const { return discrepancy <= bound; }
};

/// |Phi_A^sigma(Phi_B^tau(s0)) - Phi_B^tau(Phi_A^sigma(s0))| for the pair
/// (A, B) = (T1, T3) or (I, II). The two legs run concurrently. Throws
/// IntegrationAbort when a leg stops early.
CommuteResult commute_experiment(const CurveParams& params, const SimState& s0, double sigma, double tau,
                                 FlowPair pair = FlowPair::T1T3, const IntegratorSettings& settings = {});

/// Relative drift max(H12, H14) of one trajectory per tolerance, run concurrently.
std::vector<double> tolerance_sweep(const FlowSystem& system, const SimState& s0, double t_end,
                                    const std::vector<double>& rel_tols);

template <class Scalar>
Eigen::Matrix<Scalar, 4, 1> FlowSystem::rhs(const Eigen::Matrix<Scalar, 4, 1>& u) const {
  auto eval = [&](const Compiled& c) {
    Scalar total(0);
    for (const auto& t : c.terms) {
      Scalar term(t.coeff);
      for (std::size_t j = 0; j < 4; ++j)
        for (unsigned k = 0; k < t.exps[j]; ++k) term *= u[static_cast<Eigen::Index>(j)];
      total += term;
    }
    return total;
  };
  Eigen::Matrix<Scalar, 4, 1> out;
  for (std::size_t j = 0; j < 4; ++j) out[static_cast<Eigen::Index>(j)] = eval(num_[j]) / eval(den_[j]);
  return out;
}

}  // namespace hekdv
