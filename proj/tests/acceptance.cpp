// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hekdv/errors.hpp"
#include "hekdv/ratlimit.hpp"
#include "hekdv/simnum.hpp"
#include "hekdv/verify_bm.hpp"
#include "hekdv/verify_dkdv.hpp"

using namespace hekdv;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream note;

  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [failed: " << what << "]";
    }
  }
  void need(const VerifyReport& r, std::size_t residuals = 0) {
    need(r.passed(), r.id + ": " + r.summary());
    if (residuals) need(r.residuals.size() == residuals, r.id + " residual count " + std::to_string(r.residuals.size()));
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.ok = false;
    v.note << " [exception: " << e.what() << "]";
  }
  const double secs = seconds_since(t0);
  if (limit_s > 0 && secs >= limit_s) {
    v.ok = false;
    v.note << " [over time limit " << limit_s << " s]";
  }
  if (!v.ok) ++failures;
  std::printf("%s  criterion %2d  %-58s %8.3f s%s\n", v.ok ? "PASS" : "FAIL", n, title.c_str(), secs,
              v.note.str().c_str());
  std::fflush(stdout);
}

CurveParams septic() { return CurveParams::numeric(3, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}); }
CurvePoint on_septic(double x) { return {x, std::sqrt(cplx(std::pow(x, 7) - 1.0))}; }

}  // namespace

int main() {
  criterion(1, "flow tables (I), (II) with symbolic y", 10, [](Verdict& v) {
    v.need(verify_flow_table(Flow::I), 8);
    v.need(verify_flow_table(Flow::II), 8);
  });

  criterion(2, "first integrals, Hamiltonian form, involution", 30, [](Verdict& v) {
    v.need(verify_first_integrals(), 8);
    const VerifyReport h = verify_hamiltonian_form();
    v.need(h);
    std::size_t involutions = 0;
    for (const auto& r : h.residuals)
      if (r.label.find("{H12, H14}") != std::string::npos) ++involutions;
    v.need(involutions == 2, "two involution residuals");
  });

  criterion(3, "flow tables T1, T3 with symbolic y", 0, [](Verdict& v) {
    v.need(verify_flow_table(Flow::T1), 8);
    v.need(verify_flow_table(Flow::T3), 8);
  });

  criterion(4, "second T1-derivative and the deformed hierarchy", 300, [](Verdict& v) {
    v.need(verify_seconddif());
    const auto eqs = verify_dkdv_equations();
    v.need(eqs.size() == 4, "four hierarchy identities");
    for (const auto& r : eqs) v.need(r);
  });

  criterion(5, "reduction to KdV at y12 = y14 = 0, negative control", 0, [](Verdict& v) {
    const VerifyReport r = verify_kdv_reduction();
    v.need(r);
    bool control = false;
    for (const auto& res : r.residuals) control = control || res.label.find("symbolic y12") != std::string::npos;
    v.need(control, "negative control present");
  });

  criterion(6, "psi composition, images and intertwinings", 0, [](Verdict& v) {
    const VerifyReport r = verify_psi_intertwine();
    v.need(r);
    v.need(r.residuals.size() >= 14, "at least 14 identities");
  });

  criterion(7, "rational limit U, V, KdV residuals, genus-2 D, E", 5, [](Verdict& v) {
    v.need(verify_sigma_limit());
    v.need(verify_rational_kdv(), 3);
    v.need(verify_genus2_limit());
  });

  criterion(8, "F_i forms, limit flows, phi(t, 1), values mod the sextic", 0, [](Verdict& v) {
    v.need(verify_appendix_F(), 4);
    v.need(verify_ratc());
    v.need(verify_example1());
    v.need(verify_example3());
  });

  criterion(9, "numerical drift, commutation and tolerance sweep", 0, [](Verdict& v) {
    const CurveParams p = septic();
    const FlowSystem sys(Flow::I, p);
    const SimState s0 = seed_state(p, on_septic(2), on_septic(3));
    const auto t0 = std::chrono::steady_clock::now();
    const Trajectory t = integrate(sys, s0, 1.0);
    const double secs = seconds_since(t0);
    const auto drift = t.relative_drift();
    v.need(!t.aborted, "flow I run completed");
    v.need(drift[0] <= 1e-9 && drift[1] <= 1e-9, "drift <= 1e-9");
    v.need(secs < 10, "trajectory under 10 s");
    v.note << " drift " << std::max(drift[0], drift[1]);

    const CommuteResult c = commute_experiment(p, seed_state(p, on_septic(2), on_septic(3), Flow::T1), 0.1, 0.1);
    v.need(c.discrepancy <= 1e-8, "T1/T3 discrepancy <= 1e-8");
    const CommuteResult d =
        commute_experiment(p, seed_state(p, on_septic(-0.5), on_septic(0.7)), 0.1, 0.1, FlowPair::I_II);
    v.need(d.discrepancy <= 1e-8, "I/II discrepancy <= 1e-8");
    v.note << ", commute " << std::max(c.discrepancy, d.discrepancy);

    const auto sweep = tolerance_sweep(sys, s0, 1.0, {1e-8, 1e-12});
    v.need(sweep[1] < sweep[0], "drift(1e-12) < drift(1e-8)");
  });

  criterion(10, "single-coefficient mutations fail every suite", 0, [](Verdict& v) {
    auto fails = [&](const VerifyReport& r, const std::string& what) { v.need(!r.passed(), what + " detected"); };

    FlowTable I = flow_table(Flow::I);
    I.rhs[2] = I.rhs[2] + RatFn(6 * V(Var::u4, 2));
    fails(verify_flow_table(I), "bm: sign of -3 u4^2");

    FirstIntegrals h = first_integrals();
    h.H12 += V(Var::u2);
    fails(verify_first_integrals(h), "integrals: extra u2");

    PoissonStructure s = poisson_structure_I();
    s.set(Var::u2, Var::u7, Rat(1, 2));
    fails(verify_hamiltonian_form(s, poisson_structure_II(), first_integrals()), "hamiltonian: bracket sign");

    fails(verify_seconddif(parse_ratfn("2*u4 + 9*u2^2 + y4 - y12/(u4 - u2^2)^2 - 4*y14*u2/(u4 - u2^2)^3")),
          "dkdv: seconddif coefficient");
    DKdVCoefficients k;
    k.a4 = -32;
    fails(verify_dkdv_equations(k)[0], "dkdv: sign of a4");

    PsiImages psi = printed_psi_images();
    psi.images[3] = parse_ratfn("(u2*u7 + u4*u5)/(u2^2 - u4)");
    fails(verify_psi_intertwine(psi), "psi: image sign");

    RationalKdVCoefficients rk;
    rk.a2 = -5;
    fails(verify_rational_kdv(rk), "rational: a2 + 1");
    UVPair uv = printed_uv();
    uv.U = parse_ratfn("6*x*(x^3 + 5*t)/(x^3 - 3*t)^2");
    fails(verify_sigma_limit(uv), "rational: U coefficient");

    AppendixForms forms = printed_appendix_forms();
    forms.numerators[3] =
        parse_ratfn("15*phi*(25*phi^2*w5^2 - 45*phi*w3^2*w5 - 15*phi^4*w3*w5 + 27*w3^4 + 18*phi^3*w3^3)");
    fails(verify_appendix_F(forms), "appendix: N7 sign");
    FlowTable I2 = flow_table(Flow::I);
    I2.rhs[2] = parse_ratfn("-35*u2^4-42*u2^2*u4-4*u4^2-2*y4*(5*u2^2+u4)+4*y6*u2-y8");
    fails(verify_ratc(I2, flow_table(Flow::II)), "appendix: flow coefficient");
    SeriesCoefficients ex1 = printed_example1();
    ex1[12] = Rat(13, 45);
    fails(verify_example1(ex1), "appendix: t^12 coefficient of phi");
    Example3Printed ex3 = printed_example3();
    ex3.theta_exponents[2] = -4;
    fails(verify_example3(ex3), "appendix: theta exponent");
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
