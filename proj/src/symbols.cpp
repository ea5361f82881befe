#include "hekdv/symbols.hpp"

#include <algorithm>
#include <string>

#include "hekdv/errors.hpp"

namespace hekdv {

namespace {

constexpr std::array<std::string_view, kNumVars> kNames = {
    "X1", "Y1", "X2", "Y2", "a",   "b",   "c",   "d",   "u2",  "u4",
    "u5", "u7", "w1", "w3", "w5",  "phi", "q",   "y4",  "y6",  "y8",
    "y10", "y12", "y14", "t", "tau", "s",  "theta", "x"};

constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

}  // namespace

std::string_view var_name(Var v) { return kNames.at(index_of(v)); }

std::optional<Var> var_from_name(std::string_view name) {
  const auto it = std::find(kNames.begin(), kNames.end(), name);
  if (it == kNames.end()) return std::nullopt;
  return var_at(static_cast<std::size_t>(it - kNames.begin()));
}

Var y_var(int k) {
  switch (k) {
    case 4: return Var::y4;
    case 6: return Var::y6;
    case 8: return Var::y8;
    case 10: return Var::y10;
    case 12: return Var::y12;
    case 14: return Var::y14;
    default: throw IndexError("no curve coefficient y" + std::to_string(k));
  }
}

void Monomial::set(Var v, unsigned e) {
  if (e > kMaxExponent) throw ResourceLimit("exponent exceeds monomial capacity");
  e_[index_of(v)] = static_cast<std::uint8_t>(e);
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint8_t x) { return x == 0; });
}

unsigned Monomial::total_degree() const {
  unsigned sum = 0;
  for (auto x : e_) sum += x;
  return sum;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kSlots; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  // Bytes stay below 128, so word-wise addition cannot carry across slots.
  Monomial out;
  std::uint64_t overflow = 0;
  for (std::size_t w = 0; w < kSlots / 8; ++w) {
    std::uint64_t x, y;
    std::memcpy(&x, e_.data() + 8 * w, 8);
    std::memcpy(&y, rhs.e_.data() + 8 * w, 8);
    const std::uint64_t sum = x + y;
    overflow |= sum & kHighBits;
    std::memcpy(out.e_.data() + 8 * w, &sum, 8);
  }
  if (overflow) throw ResourceLimit("exponent exceeds monomial capacity");
  return out;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  Monomial out;
  for (std::size_t i = 0; i < kSlots; ++i)
    out.e_[i] = static_cast<std::uint8_t>(e_[i] - rhs.e_[i]);
  return out;
}

Monomial Monomial::gcd(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  for (std::size_t i = 0; i < kSlots; ++i) out.e_[i] = std::min(lhs.e_[i], rhs.e_[i]);
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t w = 0; w < kSlots / 8; ++w) {
    std::uint64_t x;
    std::memcpy(&x, e_.data() + 8 * w, 8);
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

}  // namespace hekdv
