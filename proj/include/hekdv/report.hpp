#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hekdv/mpoly.hpp"
#include "hekdv/ratfn.hpp"
#include "hekdv/symsq.hpp"

namespace hekdv {

/// Residuals are rendered with at most this many terms.
inline constexpr std::size_t kResidualTermCap = 200;

struct Residual {
  std::string label;
  std::string text;        // "0" when the identity holds
  std::size_t terms = 0;   // 0 when the identity holds
  bool truncated = false;
  bool zero() const { return terms == 0; }
};

/// Outcome of one named check: PASS iff every residual is exactly zero and
/// no error was raised.
struct VerifyReport {
  std::string id;
  std::string anchor;
  std::vector<Residual> residuals;
  std::string error;
  double millis = 0;

  bool passed() const;
  std::size_t failures() const;

  void add(const std::string& label, const MPoly& residual);
  void add(const std::string& label, const RatFn& residual);  // numerator is reported
  void add(const std::string& label, const SymSqElem& residual);
  /// A yes/no condition; `detail` is reported when it fails.
  void add_condition(const std::string& label, bool holds, const std::string& detail);

  /// One-line summary, or the first failing residual.
  std::string summary() const;
};

/// Renders p with at most `cap` terms; sets `truncated` accordingly.
std::string render_capped(const MPoly& p, std::size_t cap, bool& truncated);

/// Runs `body` on a fresh report, timing it and converting library errors
/// into a failed report.
VerifyReport run_check(const std::string& id, const std::string& anchor,
                       const std::function<void(VerifyReport&)>& body);

}  // namespace hekdv
