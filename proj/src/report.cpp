#include "hekdv/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "hekdv/errors.hpp"

namespace hekdv {

bool VerifyReport::passed() const { return error.empty() && failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(residuals.begin(), residuals.end(), [](const Residual& r) { return !r.zero(); }));
}

std::string render_capped(const MPoly& p, std::size_t cap, bool& truncated) {
  truncated = p.size() > cap;
  if (!truncated) return p.to_string();
  std::vector<Term> head(p.terms().begin(), p.terms().begin() + static_cast<std::ptrdiff_t>(cap));
  return MPoly::from_terms(std::move(head)).to_string() + " + ...";
}

void VerifyReport::add(const std::string& label, const MPoly& residual) {
  Residual r{label, "0", residual.size(), false};
  if (!residual.is_zero()) r.text = render_capped(residual, kResidualTermCap, r.truncated);
  residuals.push_back(std::move(r));
}

void VerifyReport::add(const std::string& label, const RatFn& residual) { add(label, residual.num()); }

void VerifyReport::add(const std::string& label, const SymSqElem& residual) { add(label, residual.num()); }

void VerifyReport::add_condition(const std::string& label, bool holds, const std::string& detail) {
  residuals.push_back(holds ? Residual{label, "0", 0, false} : Residual{label, detail, 1, false});
}

std::string VerifyReport::summary() const {
  if (!error.empty()) return "error: " + error;
  std::ostringstream os;
  for (const auto& r : residuals) {
    if (r.zero()) continue;
    os << failures() << " of " << residuals.size() << " residuals nonzero; " << r.label << ": " << r.text;
    if (r.truncated) os << " [truncated, " << r.terms << " terms]";
    return os.str();
  }
  if (residuals.size() == 1)
    os << "residual zero";
  else
    os << "all " << residuals.size() << " residuals zero";
  return os.str();
}

VerifyReport run_check(const std::string& id, const std::string& anchor,
                       const std::function<void(VerifyReport&)>& body) {
  VerifyReport report;
  report.id = id;
  report.anchor = anchor;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(report);
  } catch (const Error& e) {
    report.error = e.what();
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hekdv
