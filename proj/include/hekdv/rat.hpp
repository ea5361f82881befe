#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hekdv {

/// Arbitrary-precision rational, always kept canonical (gcd 1, positive denominator).
using Rat = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// Parses "p", "-p", "p/q" (and a leading '+'). Throws MalformedInput otherwise.
Rat parse_rat(std::string_view text);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace hekdv
