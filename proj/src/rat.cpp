#include "hekdv/rat.hpp"

#include <cctype>
#include <string>

#include "hekdv/errors.hpp"

namespace hekdv {

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const auto bad = [&] { return MalformedInput("not an exact rational: '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  const auto digits_ok = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && part[i] == '-') ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s, true)) throw bad();
  } else {
    if (!digits_ok(s.substr(0, slash), true) || !digits_ok(s.substr(slash + 1), false)) throw bad();
  }
  Rat r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw bad();
  r.canonicalize();
  return r;
}

}  // namespace hekdv
