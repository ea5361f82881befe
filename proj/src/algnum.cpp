#include "hekdv/algnum.hpp"

#include "hekdv/errors.hpp"

namespace hekdv {

namespace {

void require_same_ring(const AlgNum& lhs, const AlgNum& rhs) {
  if (lhs.modulus() != rhs.modulus()) throw MalformedInput("algebraic numbers over different moduli");
}

}  // namespace

AlgNum::AlgNum(UPoly modulus, const UPoly& value) : m_(upoly::trim(std::move(modulus))) {
  if (upoly::degree(m_) < 1 || upoly::leading(m_) != 1)
    throw MalformedInput("modulus must be monic of positive degree");
  v_ = upoly::divmod(value, m_).second;
}

AlgNum AlgNum::from_mpoly(const MPoly& minpoly, const MPoly& value, Var v) {
  return AlgNum(upoly::from_mpoly(minpoly, v), upoly::from_mpoly(value, v));
}

std::vector<Rat> AlgNum::coefficients() const {
  std::vector<Rat> out(static_cast<std::size_t>(upoly::degree(m_)));
  for (std::size_t k = 0; k < v_.size(); ++k) out[k] = v_[k];
  return out;
}

AlgNum AlgNum::operator-() const { return AlgNum(m_, upoly::scale(v_, Rat(-1))); }

AlgNum operator+(const AlgNum& lhs, const AlgNum& rhs) {
  require_same_ring(lhs, rhs);
  return AlgNum(lhs.m_, upoly::add(lhs.v_, rhs.v_));
}

AlgNum operator-(const AlgNum& lhs, const AlgNum& rhs) {
  require_same_ring(lhs, rhs);
  return AlgNum(lhs.m_, upoly::sub(lhs.v_, rhs.v_));
}

AlgNum operator*(const AlgNum& lhs, const AlgNum& rhs) {
  require_same_ring(lhs, rhs);
  return AlgNum(lhs.m_, upoly::mul(lhs.v_, rhs.v_));
}

bool operator==(const AlgNum& lhs, const AlgNum& rhs) { return lhs.m_ == rhs.m_ && lhs.v_ == rhs.v_; }

AlgNum algnum_invert(const AlgNum& x) {
  if (x.is_zero()) throw ZeroDivisor("zero has no inverse");
  const auto eg = upoly::ext_gcd(x.value(), x.modulus());
  if (upoly::degree(eg.g) != 0) throw ZeroDivisor("element shares a factor with the modulus");
  return AlgNum(x.modulus(), eg.s);
}

}  // namespace hekdv
