#include "hekdv/simnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>

#include "hekdv/errors.hpp"

namespace hekdv {

namespace {

constexpr std::array<Var, 6> kY = {Var::y4, Var::y6, Var::y8, Var::y10, Var::y12, Var::y14};

void require_numeric_genus3(const CurveParams& params) {
  if (params.mode != CurveParams::Mode::Numeric) throw ModeError("numerical flows need numeric curve coefficients");
  if (params.genus != 3) throw IncompatibleGenus("numerical flows are implemented for genus 3");
}

std::vector<std::pair<Var, MPoly>> y_values(const CurveParams& params) {
  std::vector<std::pair<Var, MPoly>> out;
  for (std::size_t j = 0; j < kY.size(); ++j) out.emplace_back(kY[j], params.coeffs[j]);
  return out;
}

FlowSystem::Compiled compile(const MPoly& p) {
  FlowSystem::Compiled c;
  for (const auto& t : p.terms()) {
    FlowSystem::Term term{t.coeff.get_d(), {}};
    unsigned used = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      term.exps[j] = t.mono[kUVars[j]];
      used += term.exps[j];
    }
    if (used != t.mono.total_degree()) throw InternalError("numeric flow depends on a symbol other than u");
    c.terms.push_back(term);
  }
  return c;
}

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, 4, 1>;

StateVec to_state(const Vec<double>& v) { return v.cast<cplx>(); }
StateVec to_state(const Vec<cplx>& v) { return v; }

template <class Scalar>
Vec<Scalar> from_state(const StateVec& u) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return u.real();
  } else {
    return u;
  }
}

// Components as reals: 4 for a real vector, 8 for a complex one.
template <class Scalar>
std::vector<double> parts(const Vec<Scalar>& v) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < 4; ++i) {
    if constexpr (std::is_same_v<Scalar, double>) {
      out.push_back(v[i]);
    } else {
      out.push_back(v[i].real());
      out.push_back(v[i].imag());
    }
  }
  return out;
}

template <class Scalar>
double scaled_norm(const Vec<Scalar>& delta, const Vec<Scalar>& y0, const Vec<Scalar>& y1,
                   const IntegratorSettings& s) {
  const auto d = parts(delta), a = parts(y0), b = parts(y1);
  double sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double sc = s.abs_tol + s.rel_tol * std::max(std::abs(a[i]), std::abs(b[i]));
    sum += (d[i] / sc) * (d[i] / sc);
  }
  return std::sqrt(sum / static_cast<double>(d.size()));
}

template <class Scalar>
bool finite(const Vec<Scalar>& v) {
  for (double x : parts(v))
    if (!std::isfinite(x)) return false;
  return true;
}

template <class Scalar>
double pole_distance(const Vec<Scalar>& u) {
  return std::abs(u[1] - u[0] * u[0]);
}

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

template <class Scalar>
Trajectory run(const FlowSystem& system, const SimState& s0, double t_end, const IntegratorSettings& s) {
  Trajectory traj;
  traj.flow = system.flow();
  traj.settings = s;
  traj.complex_mode = s0.complex_mode;
  auto record = [&](double t, const Vec<Scalar>& y) {
    const StateVec u = to_state(y);
    const auto h = system.integrals(u);
    traj.samples.push_back(Sample{t, u, h[0], h[1]});
  };

  Vec<Scalar> y = from_state<Scalar>(s0.u);
  double t = s0.time;
  record(t, y);
  const double span = t_end - t;
  if (span == 0) return traj;
  const double dir = span > 0 ? 1.0 : -1.0;
  const double guard = system.has_pole() ? s.pole_guard * pole_distance(y) : 0.0;
  auto f = [&](const Vec<Scalar>& v) { return system.rhs<Scalar>(v); };
  auto admissible = [&](const Vec<Scalar>& v) { return finite(v) && (!system.has_pole() || pole_distance(v) >= guard); };

  Vec<Scalar> k1 = f(y);
  if (!finite(k1)) {
    traj.aborted = true;
    traj.abort_reason = "right-hand side is not finite at the initial state";
    return traj;
  }

  // Initial step as in Hairer-Norsett-Wanner.
  const double d0 = scaled_norm(y, y, y, s), d1 = scaled_norm(k1, y, y, s);
  double h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  h = std::min(h, std::abs(span));
  {
    const Vec<Scalar> y1 = y + (dir * h) * k1;
    const Vec<Scalar> f1 = f(y1);
    const double d2 = finite(f1) ? scaled_norm(Vec<Scalar>(f1 - k1), y, y, s) / h : 1e10;
    const double dm = std::max(d1, d2);
    const double h1 = dm <= 1e-15 ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / dm, 1.0 / 5);
    h = std::min({100 * h, h1, std::abs(span)});
  }

  constexpr double safe = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
  constexpr double fac_min = 0.2, fac_max = 10.0;
  double facold = 1e-4;
  std::size_t steps = 0;
  bool last_reject_pole = false;

  while (dir * (t_end - t) > 0) {
    if (steps++ >= s.max_steps) {
      traj.aborted = true;
      traj.abort_reason = "step limit reached";
      return traj;
    }
    const double min_step = 1e-14 * std::max(1.0, std::abs(t));
    if (h < min_step) {
      traj.aborted = true;
      traj.abort_reason = last_reject_pole ? "step size underflow near the singular set u4 = u2^2"
                                           : "step size underflow";
      return traj;
    }
    bool last = false;
    if (h >= std::abs(t_end - t)) {
      h = std::abs(t_end - t);
      last = true;
    }
    const double hs = dir * h;

    const Vec<Scalar> y2 = y + hs * (a21 * k1);
    const Vec<Scalar> k2 = f(y2);
    const Vec<Scalar> y3 = y + hs * (a31 * k1 + a32 * k2);
    const Vec<Scalar> k3 = f(y3);
    const Vec<Scalar> y4 = y + hs * (a41 * k1 + a42 * k2 + a43 * k3);
    const Vec<Scalar> k4 = f(y4);
    const Vec<Scalar> y5 = y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    const Vec<Scalar> k5 = f(y5);
    const Vec<Scalar> y6 = y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    const Vec<Scalar> k6 = f(y6);
    const Vec<Scalar> ynew = y + hs * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
    const Vec<Scalar> k7 = f(ynew);

    bool ok = true;
    for (const Vec<Scalar>* v : {&y2, &y3, &y4, &y5, &y6, &ynew}) ok = ok && admissible(*v);
    for (const Vec<Scalar>* v : {&k2, &k3, &k4, &k5, &k6, &k7}) ok = ok && finite(*v);
    if (!ok) {
      last_reject_pole = system.has_pole();
      ++traj.rejected_steps;
      h *= 0.25;
      continue;
    }

    const Vec<Scalar> err_vec = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double err = scaled_norm(err_vec, y, ynew, s);
    const double fac11 = std::pow(std::max(err, 1e-300), expo1);
    if (err <= 1.0) {
      double fac = fac11 / std::pow(facold, beta);
      fac = std::clamp(fac / safe, 1.0 / fac_max, 1.0 / fac_min);
      facold = std::max(err, 1e-4);
      t = last ? t_end : t + hs;
      y = ynew;
      k1 = k7;
      record(t, y);
      h /= fac;
      last_reject_pole = false;
    } else {
      ++traj.rejected_steps;
      h /= std::min(1.0 / fac_min, fac11 / safe);
    }
  }
  return traj;
}

}  // namespace

FlowSystem::FlowSystem(Flow flow, const CurveParams& params) : flow_(flow), params_(params) {
  require_numeric_genus3(params);
  params.validate();
  const auto ys = y_values(params);
  y12_ = params.y(12).constant_value().get_d();
  y14_ = params.y(14).constant_value().get_d();
  const FlowTable table = flow_table(flow);
  for (std::size_t j = 0; j < 4; ++j) {
    num_[j] = compile(table.rhs[j].num().compose(ys));
    den_[j] = compile(table.rhs[j].den().compose(ys));
  }
  const FirstIntegrals h = first_integrals();
  h_[0] = compile(h.H12.compose(ys));
  h_[1] = compile(h.H14.compose(ys));
}

std::array<cplx, 2> FlowSystem::integrals(const StateVec& u) const {
  std::array<cplx, 2> out{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (const auto& t : h_[i].terms) {
      cplx term(t.coeff);
      for (std::size_t j = 0; j < 4; ++j)
        for (unsigned k = 0; k < t.exps[j]; ++k) term *= u[static_cast<Eigen::Index>(j)];
      out[i] += term;
    }
  }
  return out;
}

std::array<double, 2> FlowSystem::integral_magnitudes(const StateVec& u) const {
  std::array<double, 2> out{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (const auto& t : h_[i].terms) {
      double term = std::abs(t.coeff);
      for (std::size_t j = 0; j < 4; ++j)
        for (unsigned k = 0; k < t.exps[j]; ++k) term *= std::abs(u[static_cast<Eigen::Index>(j)]);
      out[i] += term;
    }
  }
  return out;
}

SimState seed_state(const CurveParams& params, const CurvePoint& p1, const CurvePoint& p2, Flow flow) {
  require_numeric_genus3(params);
  const MPoly Q = curve_Q(params, Var::x);
  for (const CurvePoint* p : {&p1, &p2}) {
    const cplx q = Q.evaluate<cplx>([&](Var) { return p->x; });
    const double scale = std::max({1.0, std::abs(q), std::norm(p->y)});
    if (!std::isfinite(std::abs(p->x)) || !std::isfinite(std::abs(p->y)) ||
        std::abs(p->y * p->y - q) > kCurveTolerance * scale)
      throw SeedError("point is not on the curve: |y^2 - Q(x)| = " + std::to_string(std::abs(p->y * p->y - q)));
  }
  const double xscale = std::max({1.0, std::abs(p1.x), std::abs(p2.x)});
  if (std::abs(p1.x - p2.x) <= 1e-14 * xscale) throw SeedError("the two points have the same x coordinate");
  if ((flow == Flow::T1 || flow == Flow::T3) && std::abs(p1.x * p2.x) <= 1e-14 * xscale * xscale)
    throw SeedError("T-flows need x1 x2 != 0");

  SimState s;
  s.u << (p1.x + p2.x) / 2.0, (p1.x - p2.x) * (p1.x - p2.x) / 4.0, (p1.y - p2.y) / (p1.x - p2.x),
      (p1.y + p2.y) / 2.0;
  s.complex_mode = false;
  for (Eigen::Index i = 0; i < 4; ++i)
    if (s.u[i].imag() != 0) s.complex_mode = true;

  const FlowSystem system(flow, params);
  const auto h = system.integrals(s.u);
  const auto mag = system.integral_magnitudes(s.u);
  const double target[2] = {system.y12(), system.y14()};
  for (std::size_t i = 0; i < 2; ++i) {
    const double scale = std::max({1.0, mag[i], std::abs(target[i])});
    if (std::abs(h[i] - target[i]) > kSeedTolerance * scale)
      throw SeedError(std::string(i == 0 ? "H12" : "H14") + " misses its curve value by " +
                      std::to_string(std::abs(h[i] - target[i])));
  }
  return s;
}

SimState Trajectory::final_state() const {
  return SimState{samples.back().time, samples.back().u, complex_mode};
}

std::array<double, 2> Trajectory::relative_drift() const {
  std::array<double, 2> out{};
  const Sample& first = samples.front();
  for (const auto& smp : samples) {
    out[0] = std::max(out[0], std::abs(smp.H12 - first.H12) / std::max(1.0, std::abs(first.H12)));
    out[1] = std::max(out[1], std::abs(smp.H14 - first.H14) / std::max(1.0, std::abs(first.H14)));
  }
  return out;
}

Trajectory integrate(const FlowSystem& system, const SimState& s0, double t_end, const IntegratorSettings& settings) {
  if (!(settings.rel_tol > 0) || !(settings.abs_tol > 0)) throw ConfigError("tolerances must be positive");
  if (!std::isfinite(t_end)) throw ConfigError("t_end must be finite");
  return s0.complex_mode ? run<cplx>(system, s0, t_end, settings) : run<double>(system, s0, t_end, settings);
}

void write_csv(const Trajectory& trajectory, std::ostream& os) {
  os << "time,u2,u4,u5,u7,H12,H14";
  if (trajectory.complex_mode) os << ",im_u2,im_u4,im_u5,im_u7,im_H12,im_H14";
  os << '\n';
  char buf[32];
  auto put = [&](double v, bool comma) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    if (comma) os << ',';
    os << buf;
  };
  for (const auto& smp : trajectory.samples) {
    put(smp.time, false);
    for (Eigen::Index i = 0; i < 4; ++i) put(smp.u[i].real(), true);
    put(smp.H12.real(), true);
    put(smp.H14.real(), true);
    if (trajectory.complex_mode) {
      for (Eigen::Index i = 0; i < 4; ++i) put(smp.u[i].imag(), true);
      put(smp.H12.imag(), true);
      put(smp.H14.imag(), true);
    }
    os << '\n';
  }
}

CommuteResult commute_experiment(const CurveParams& params, const SimState& s0, double sigma, double tau,
                                 FlowPair pair, const IntegratorSettings& settings) {
  const Flow fa = pair == FlowPair::T1T3 ? Flow::T1 : Flow::I;
  const Flow fb = pair == FlowPair::T1T3 ? Flow::T3 : Flow::II;
  const FlowSystem A(fa, params), B(fb, params);
  SimState start = s0;
  start.time = 0;

  auto leg = [&](const FlowSystem& first, double t1, const FlowSystem& second, double t2) {
    const Trajectory a = integrate(first, start, t1, settings);
    if (a.aborted) throw IntegrationAbort(flow_name(first.flow()) + " leg: " + a.abort_reason);
    SimState mid = a.final_state();
    mid.time = 0;
    const Trajectory b = integrate(second, mid, t2, settings);
    if (b.aborted) throw IntegrationAbort(flow_name(second.flow()) + " leg: " + b.abort_reason);
    return b.back().u;
  };
  auto ab = std::async(std::launch::async, [&] { return leg(B, tau, A, sigma); });
  auto ba = std::async(std::launch::async, [&] { return leg(A, sigma, B, tau); });

  CommuteResult r;
  r.pair = pair;
  r.sigma = sigma;
  r.tau = tau;
  r.a_after_b = ab.get();
  r.b_after_a = ba.get();
  r.discrepancy = (r.a_after_b - r.b_after_a).norm();
  r.scale = std::max(1.0, s0.u.norm());
  r.bound = 1e-8 * r.scale;
  return r;
}

std::vector<double> tolerance_sweep(const FlowSystem& system, const SimState& s0, double t_end,
                                    const std::vector<double>& rel_tols) {
  std::vector<std::future<Trajectory>> runs;
  for (double tol : rel_tols) {
    IntegratorSettings s;
    s.rel_tol = tol;
    s.abs_tol = std::min(s.abs_tol, tol * 1e-2);
    runs.push_back(std::async(std::launch::async, [&system, s0, t_end, s] { return integrate(system, s0, t_end, s); }));
  }
  std::vector<double> out;
  for (auto& f : runs) {
    const Trajectory t = f.get();
    if (t.aborted) throw IntegrationAbort(t.abort_reason);
    const auto d = t.relative_drift();
    out.push_back(std::max(d[0], d[1]));
  }
  return out;
}

}  // namespace hekdv
