#include "hekdv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "hekdv/errors.hpp"
#include "hekdv/memcap.hpp"
#include "hekdv/ratlimit.hpp"
#include "hekdv/simnum.hpp"
#include "hekdv/verify_bm.hpp"
#include "hekdv/verify_dkdv.hpp"

namespace hekdv::cli {

namespace {

using Task = std::function<std::vector<VerifyReport>()>;

template <class F>
Task one(F f) {
  return [f] { return std::vector<VerifyReport>{f()}; };
}

// Every verification task under a stable key; a task may yield several checks.
const std::map<std::string, Task>& tasks() {
  static const std::map<std::string, Task> t = {
      {"flow-I", one([] { return verify_flow_table(Flow::I); })},
      {"flow-II", one([] { return verify_flow_table(Flow::II); })},
      {"flow-T1", one([] { return verify_flow_table(Flow::T1); })},
      {"flow-T3", one([] { return verify_flow_table(Flow::T3); })},
      {"t1-cross", one([] { return verify_t1_cross_consistency(); })},
      {"integrals", one([] { return verify_first_integrals(); })},
      {"hamiltonian", one([] { return verify_hamiltonian_form(); })},
      {"seconddif", one([] { return verify_seconddif(); })},
      {"dkdv", [] { return verify_dkdv_equations(); }},
      {"kdv-reduction", one([] { return verify_kdv_reduction(); })},
      {"psi", one([] { return verify_psi_intertwine(); })},
      {"sigma-limit", one([] { return verify_sigma_limit(); })},
      {"rational-kdv", one([] { return verify_rational_kdv(); })},
      {"genus2", one([] { return verify_genus2_limit(); })},
      {"appendix-F", one([] { return verify_appendix_F(); })},
      {"ratc", one([] { return verify_ratc(); })},
      {"example1", one([] { return verify_example1(); })},
      {"example3", one([] { return verify_example3(); })},
  };
  return t;
}

const std::map<std::string, std::vector<std::string>>& suites() {
  static const std::map<std::string, std::vector<std::string>> s = {
      {"bm", {"flow-I", "flow-II", "flow-T1", "flow-T3", "t1-cross"}},
      {"integrals", {"integrals"}},
      {"hamiltonian", {"hamiltonian"}},
      {"dkdv", {"seconddif", "dkdv", "kdv-reduction", "psi"}},
      {"psi", {"psi"}},
      {"rational", {"sigma-limit", "rational-kdv", "genus2"}},
      {"appendix", {"appendix-F", "ratc", "example1", "example3"}},
  };
  return s;
}

std::vector<std::string> task_keys(const std::string& suite) {
  if (suite != "all") {
    const auto it = suites().find(suite);
    if (it == suites().end()) throw ConfigError("unknown suite '" + suite + "'");
    return it->second;
  }
  std::vector<std::string> keys;
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    for (const auto& k : suites().at(name))
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  }
  return keys;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

CurveParams parse_curve(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 6) throw ConfigError("--y needs six exact rationals y4,y6,y8,y10,y12,y14");
  std::vector<Rat> values;
  for (const auto& p : parts) values.push_back(parse_rat(p));
  CurveParams params = CurveParams::numeric(3, values);
  if (!in_Bg(params)) throw ConfigError("the curve is singular: Q has a multiple root");
  return params;
}

// "x", "x,+", "x,-" (y = +-sqrt Q(x)) or "x,y" with exact rationals.
CurvePoint parse_point(const std::string& text, const CurveParams& params) {
  const auto parts = split(text, ',');
  if (parts.empty() || parts.size() > 2) throw ConfigError("a point is written x or x,y");
  const double x = parse_rat(parts[0]).get_d();
  const std::string y = parts.size() == 2 ? parts[1] : "+";
  if (y == "+" || y == "-") {
    const MPoly Q = curve_Q(params, Var::x);
    const cplx root = std::sqrt(Q.evaluate<cplx>([&](Var) { return cplx(x); }));
    return {x, y == "+" ? root : -root};
  }
  return {x, parse_rat(y).get_d()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw ConfigError("failed writing '" + path + "'");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct SimOptions {
  std::string flow;
  std::string y = "0,0,0,0,0,1";
  std::string p1 = "-1/2,+";
  std::string p2 = "7/10,+";
  double t_end = 1.0;
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  std::string csv;
  std::string out;
  double sigma = 0, tau = 0;
  std::string pair = "T1T3";
};

int do_verify(const std::string& suite, const std::string& out_path, std::ostream& out) {
  const std::vector<VerifyReport> reports = run_suite(suite);
  for (const auto& r : reports)
    out << (r.passed() ? "PASS " : "FAIL ") << r.id << "  [" << r.anchor << "]  " << r.summary() << "  ("
        << fmt(r.millis) << " ms)\n";
  const nlohmann::json doc = emit_report(reports);
  out << "overall: " << doc["overall"].get<std::string>() << '\n';
  if (!out_path.empty()) write_file(out_path, doc.dump(2) + "\n");
  return doc["overall"] == "PASS" ? 0 : 1;
}

IntegratorSettings settings_of(const SimOptions& o) {
  if (!(o.rel_tol > 0) || !(o.abs_tol > 0)) throw ConfigError("tolerances must be positive");
  IntegratorSettings s;
  s.rel_tol = o.rel_tol;
  s.abs_tol = o.abs_tol;
  return s;
}

int do_simulate(const SimOptions& o, std::ostream& out) {
  const auto flow = parse_flow(o.flow);
  if (!flow) throw ConfigError("unknown flow '" + o.flow + "'");
  const CurveParams params = parse_curve(o.y);
  const SimState s0 = seed_state(params, parse_point(o.p1, params), parse_point(o.p2, params), *flow);
  const Trajectory t = integrate(FlowSystem(*flow, params), s0, o.t_end, settings_of(o));
  const auto drift = t.relative_drift();
  out << "flow " << o.flow << ": " << t.samples.size() << " samples, t = " << fmt17(t.back().time)
      << (t.complex_mode ? " (complex state)" : "") << '\n';
  out << "relative drift H12 " << fmt(drift[0]) << ", H14 " << fmt(drift[1]) << '\n';
  if (t.aborted) out << "aborted: " << t.abort_reason << '\n';
  if (!o.csv.empty()) {
    std::ostringstream csv;
    write_csv(t, csv);
    write_file(o.csv, csv.str());
  }
  if (!o.out.empty()) {
    nlohmann::json doc = {
        {"version", kVersion},
        {"simulate",
         {{"flow", o.flow},
          {"samples", t.samples.size()},
          {"rejected_steps", t.rejected_steps},
          {"t_final", t.back().time},
          {"complex", t.complex_mode},
          {"drift_H12", drift[0]},
          {"drift_H14", drift[1]},
          {"aborted", t.aborted},
          {"abort_reason", t.abort_reason},
          {"rel_tol", o.rel_tol},
          {"abs_tol", o.abs_tol}}},
        {"overall", t.aborted ? "FAIL" : "PASS"}};
    write_file(o.out, doc.dump(2) + "\n");
  }
  return t.aborted ? 1 : 0;
}

int do_series(const std::string& what, int order, const std::string& out_path, std::ostream& out) {
  if (what != "phi") throw ConfigError("only the expansion 'phi' is available");
  const PSeries s = phi_series_example1(order);
  out << "phi(t, 1) = " << s.to_string() << '\n';
  if (!out_path.empty()) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
    const nlohmann::json doc = {{"version", kVersion},
                                {"series", {{"name", "phi(t, 1)"}, {"order", order}, {"coefficients", coeffs}}}};
    write_file(out_path, doc.dump(2) + "\n");
  }
  return 0;
}

int do_commute(const SimOptions& o, std::ostream& out) {
  FlowPair pair;
  if (o.pair == "T1T3") pair = FlowPair::T1T3;
  else if (o.pair == "I_II") pair = FlowPair::I_II;
  else throw ConfigError("unknown pair '" + o.pair + "'");
  const CurveParams params = parse_curve(o.y);
  const Flow seed_flow = pair == FlowPair::T1T3 ? Flow::T1 : Flow::I;
  const SimState s0 = seed_state(params, parse_point(o.p1, params), parse_point(o.p2, params), seed_flow);

  VerifyReport r;
  r.id = pair == FlowPair::T1T3 ? "num-commute-T1T3" : "num-commute-I-II";
  r.anchor = pair == FlowPair::T1T3 ? "Proposition 5.1" : "Section 3 commuting derivations";
  const auto start = std::chrono::steady_clock::now();
  try {
    const CommuteResult c = commute_experiment(params, s0, o.sigma, o.tau, pair, settings_of(o));
    r.add_condition("discrepancy " + fmt(c.discrepancy) + " <= " + fmt(c.bound), c.passed(),
                    "discrepancy " + fmt(c.discrepancy) + " exceeds " + fmt(c.bound));
    out << "discrepancy " << fmt(c.discrepancy) << " (bound " << fmt(c.bound) << ")\n";
  } catch (const IntegrationAbort& e) {
    r.error = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << (r.passed() ? "PASS " : "FAIL ") << r.id << "  " << r.summary() << '\n';
  if (!o.out.empty()) write_file(o.out, emit_report({r}).dump(2) + "\n");
  return r.passed() ? 0 : 1;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",      "bm",       "integrals", "hamiltonian",
                                                 "dkdv",     "psi",      "rational",  "appendix"};
  return names;
}

std::vector<VerifyReport> run_suite(const std::string& suite) {
  std::vector<std::future<std::vector<VerifyReport>>> running;
  for (const auto& key : task_keys(suite)) running.push_back(std::async(std::launch::async, tasks().at(key)));
  std::vector<VerifyReport> out;
  for (auto& f : running)
    for (auto& r : f.get()) out.push_back(std::move(r));
  return out;
}

nlohmann::json emit_report(const std::vector<VerifyReport>& reports) {
  if (reports.empty()) throw MalformedInput("empty check list");
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.passed();
    checks.push_back({{"id", r.id},
                      {"paper_anchor", r.anchor},
                      {"status", r.passed() ? "PASS" : "FAIL"},
                      {"residual_summary", r.summary()},
                      {"millis", r.millis}});
  }
  return {{"version", kVersion}, {"checks", checks}, {"overall", all ? "PASS" : "FAIL"}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical checks for the deformed KdV hierarchy on genus-3 curves", "hekdv"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option values");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_version_flag("--version", kVersion);

  std::string suite, out_path, series_name = "phi";
  int order = kDefaultNewtonOrder;
  SimOptions sim;

  auto* verify = app.add_subcommand("verify", "Run exact verification suites");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--out", out_path, "Write the JSON report here");

  auto* simulate = app.add_subcommand("simulate", "Integrate one flow from a seed on the curve");
  simulate->add_option("--flow", sim.flow, "I, II, T1 or T3")->required()->check(CLI::IsMember({"I", "II", "T1", "T3"}));
  auto add_curve = [&](CLI::App* sub) {
    sub->add_option("--y", sim.y, "y4,y6,y8,y10,y12,y14 as exact rationals")->capture_default_str();
    sub->add_option("--p1", sim.p1, "First point: x, x,+ / x,- (y = +-sqrt Q(x)) or x,y")->capture_default_str();
    sub->add_option("--p2", sim.p2, "Second point")->capture_default_str();
    sub->add_option("--rel-tol", sim.rel_tol, "Relative tolerance")->capture_default_str();
    sub->add_option("--abs-tol", sim.abs_tol, "Absolute tolerance")->capture_default_str();
    sub->add_option("--out", sim.out, "Write a JSON summary here");
  };
  add_curve(simulate);
  simulate->add_option("--t-end", sim.t_end, "Final time")->capture_default_str();
  simulate->add_option("--csv", sim.csv, "Write the trajectory as CSV here");

  auto* series = app.add_subcommand("series", "Power series expansions");
  series->add_option("name", series_name, "Expansion name (phi)")->required();
  series->add_option("--order", order, "Truncation order")->capture_default_str();
  series->add_option("--out", out_path, "Write the coefficients as JSON here");

  auto* commute = app.add_subcommand("commute", "Numerical commutation of two flows");
  commute->add_option("--sigma", sim.sigma, "Time along the first flow")->required();
  commute->add_option("--tau", sim.tau, "Time along the second flow")->required();
  commute->add_option("--pair", sim.pair, "T1T3 or I_II")->capture_default_str()->check(CLI::IsMember({"T1T3", "I_II"}));
  add_curve(commute);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hekdv: " << e.what() << '\n';
    return 2;
  }

  try {
    if (const char* env = std::getenv("HEKDV_MEM_CAP_MB")) {
      char* end = nullptr;
      const unsigned long long mb = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || mb == 0) throw ConfigError("HEKDV_MEM_CAP_MB must be a positive integer");
      set_memory_cap_mb(static_cast<std::size_t>(mb));
    }
    if (*verify) return do_verify(suite, out_path, out);
    if (*simulate) return do_simulate(sim, out);
    if (*series) return do_series(series_name, order, out_path, out);
    if (*commute) return do_commute(sim, out);
  } catch (const ConfigError& e) {
    err << "hekdv: " << e.what() << '\n';
    return 2;
  } catch (const MalformedInput& e) {
    err << "hekdv: " << e.what() << '\n';
    return 2;
  } catch (const SeedError& e) {
    err << "hekdv: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "hekdv: " << e.what() << '\n';
    return 1;
  }
  err << "hekdv: no subcommand\n";
  return 2;
}

}  // namespace hekdv::cli
