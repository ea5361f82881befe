#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string_view>

namespace hekdv {

// Global symbol order. The enumerator position is the lexicographic rank used
// by every polynomial: X1 > Y1 > X2 > Y2 > a > ... > tau, followed by the
// auxiliary symbols s (coordinate bridge), theta (cube root of t) and x.
enum class Var : std::uint8_t {
  X1, Y1, X2, Y2,
  a, b, c, d,
  u2, u4, u5, u7,
  w1, w3, w5,
  phi, q,
  y4, y6, y8, y10, y12, y14,
  t, tau,
  s, theta, x,
  Count
};

inline constexpr std::size_t kNumVars = static_cast<std::size_t>(Var::Count);

constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }
constexpr Var var_at(std::size_t i) { return static_cast<Var>(i); }

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Curve coefficient symbol y_k, k in {4,6,...,14}.
Var y_var(int k);

/// Exponent vector over the global symbol order, one byte per symbol.
/// Exponents are limited to 127; larger products throw ResourceLimit.
class Monomial {
 public:
  static constexpr std::size_t kSlots = 32;
  static constexpr unsigned kMaxExponent = 127;
  static_assert(kNumVars <= kSlots);

  Monomial() = default;
  explicit Monomial(Var v, unsigned e = 1) { set(v, e); }

  unsigned operator[](Var v) const { return e_[index_of(v)]; }
  unsigned exponent(std::size_t i) const { return e_[i]; }
  void set(Var v, unsigned e);

  bool is_one() const;
  unsigned total_degree() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& rhs) const;
  /// Requires divides(); exponents are subtracted.
  Monomial operator/(const Monomial& rhs) const;

  /// Componentwise minimum.
  static Monomial gcd(const Monomial& lhs, const Monomial& rhs);

  friend bool operator==(const Monomial& lhs, const Monomial& rhs) {
    return std::memcmp(lhs.e_.data(), rhs.e_.data(), kSlots) == 0;
  }
  // Lexicographic order over the global symbol order.
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
    const int c = std::memcmp(lhs.e_.data(), rhs.e_.data(), kSlots);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  alignas(8) std::array<std::uint8_t, kSlots> e_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace hekdv
