#include "hekdv/symsq.hpp"

#include <algorithm>
#include <sstream>

#include "hekdv/errors.hpp"

namespace hekdv {

namespace {

bool has_Y(const MPoly& p) { return p.contains(Var::Y1) || p.contains(Var::Y2); }

int compare_poly(const MPoly& lhs, const MPoly& rhs) {
  const auto& a = lhs.terms();
  const auto& b = rhs.terms();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i].mono != b[i].mono) return a[i].mono < b[i].mono ? -1 : 1;
    const int c = cmp(a[i].coeff, b[i].coeff);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

bool same_field(const SymSqField& lhs, const SymSqField& rhs) {
  return &lhs == &rhs || (lhs.genus() == rhs.genus() && lhs.Q(1) == rhs.Q(1));
}

void require_same_field(const SymSqElem& lhs, const SymSqElem& rhs) {
  if (!same_field(*lhs.field(), *rhs.field())) throw MalformedInput("elements of different function fields");
}

using Factors = std::vector<SymSqElem::Factor>;

void insert_factor(Factors& fs, const MPoly& atom, unsigned exp) {
  if (exp == 0) return;
  for (auto& f : fs) {
    if (f.atom == atom) {
      f.exp += exp;
      return;
    }
  }
  fs.push_back({atom, exp});
}

void sort_factors(Factors& fs) {
  std::sort(fs.begin(), fs.end(),
            [](const SymSqElem::Factor& l, const SymSqElem::Factor& r) { return compare_poly(l.atom, r.atom) > 0; });
}

// Splits a nonzero Y-free polynomial into a scalar and monic atoms, peeling off
// single variables and X1 - X2 first so that equal factors are recognized.
std::pair<Rat, Factors> factor_den(const MPoly& den) {
  if (den.is_zero()) throw ZeroDivisor("zero denominator");
  if (has_Y(den)) throw MalformedInput("denominator must be free of Y1, Y2");
  const Rat lc = den.leading_term().coeff;
  MPoly rest = den.scaled(1 / lc);
  Factors fs;
  const Monomial content = rest.monomial_content();
  if (!content.is_one()) {
    rest = rest.divide_monomial(content);
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (content.exponent(i) > 0) insert_factor(fs, V(var_at(i)), content.exponent(i));
  }
  const MPoly diff = V(Var::X1) - V(Var::X2);
  unsigned k = 0;
  while (!rest.is_constant()) {
    auto q = rest.divide_exact(diff);
    if (!q) break;
    rest = std::move(*q);
    ++k;
  }
  insert_factor(fs, diff, k);
  if (!rest.is_constant()) insert_factor(fs, rest, 1);
  sort_factors(fs);
  return {lc, fs};
}

MPoly factors_product(const Factors& fs) {
  MPoly out(1);
  for (const auto& f : fs) out *= f.atom.pow(f.exp);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SymSqField

SymSqField::SymSqField(CurveParams params) : params_(std::move(params)) {
  q1_ = curve_Q(params_, Var::X1);
  q2_ = curve_Q(params_, Var::X2);
  dq1_ = q1_.derivative(Var::X1);
  dq2_ = q2_.derivative(Var::X2);
}

std::shared_ptr<const SymSqField> SymSqField::make(const CurveParams& params) {
  return std::shared_ptr<const SymSqField>(new SymSqField(params));
}

MPoly SymSqField::reduce(const MPoly& p) const {
  return p.reduce_power(Var::Y1, 2, q1_).reduce_power(Var::Y2, 2, q2_);
}

MPoly reduce_Y(const MPoly& p, const CurveParams& params) {
  return p.reduce_power(Var::Y1, 2, curve_Q(params, Var::X1)).reduce_power(Var::Y2, 2, curve_Q(params, Var::X2));
}

// ---------------------------------------------------------------------------
// SymSqElem

SymSqElem::SymSqElem(FieldPtr field, const MPoly& p) : field_(std::move(field)), num_(field_->reduce(p)) {}

SymSqElem::SymSqElem(FieldPtr field, const MPoly& num, const MPoly& den) : field_(std::move(field)) {
  auto [lc, fs] = factor_den(den);
  num_ = field_->reduce(num).scaled(1 / lc);
  den_ = std::move(fs);
  cancel();
}

SymSqElem::SymSqElem(FieldPtr field, MPoly num, std::vector<Factor> den, bool)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  cancel();
}

void SymSqElem::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.exp > 0) {
      auto q = num_.divide_exact(f.atom);
      if (!q) break;
      num_ = std::move(*q);
      --f.exp;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.exp == 0; });
}

MPoly SymSqElem::den() const { return factors_product(den_); }

SymSqElem SymSqElem::operator-() const { return SymSqElem(field_, -num_, den_, true); }

SymSqElem operator+(const SymSqElem& lhs, const SymSqElem& rhs) {
  require_same_field(lhs, rhs);
  if (lhs.is_zero()) return rhs;
  if (rhs.is_zero()) return lhs;
  Factors lcm = lhs.den_;
  for (const auto& f : rhs.den_) {
    auto it = std::find_if(lcm.begin(), lcm.end(), [&](const SymSqElem::Factor& g) { return g.atom == f.atom; });
    if (it == lcm.end())
      lcm.push_back(f);
    else
      it->exp = std::max(it->exp, f.exp);
  }
  sort_factors(lcm);
  auto lift = [&](const SymSqElem& e) {
    MPoly n = e.num_;
    for (const auto& f : lcm) {
      unsigned have = 0;
      for (const auto& g : e.den_)
        if (g.atom == f.atom) have = g.exp;
      if (f.exp > have) n *= f.atom.pow(f.exp - have);
    }
    return n;
  };
  MPoly num = lift(lhs) + lift(rhs);
  return SymSqElem(lhs.field_, std::move(num), std::move(lcm), true);
}

SymSqElem operator-(const SymSqElem& lhs, const SymSqElem& rhs) { return lhs + (-rhs); }

SymSqElem operator*(const SymSqElem& lhs, const SymSqElem& rhs) {
  require_same_field(lhs, rhs);
  if (lhs.is_zero()) return lhs;
  if (rhs.is_zero()) return rhs;
  Factors fs = lhs.den_;
  for (const auto& f : rhs.den_) insert_factor(fs, f.atom, f.exp);
  sort_factors(fs);
  return SymSqElem(lhs.field_, lhs.field_->reduce(lhs.num_ * rhs.num_), std::move(fs), true);
}

SymSqElem SymSqElem::inverse() const {
  if (is_zero()) throw ZeroDivisor("inverse of zero");
  const SymSqField& f = *field_;
  MPoly numer = factors_product(den_);
  MPoly norm = num_;
  // Multiply by Y-conjugates until the denominator is Y-free.
  if (norm.contains(Var::Y1)) {
    const MPoly conj = conjugate(true, false).num_;
    numer = f.reduce(numer * conj);
    norm = f.reduce(norm * conj);
  }
  if (norm.contains(Var::Y2)) {
    const MPoly conj = SymSqElem(field_, norm, Factors{}, true).conjugate(false, true).num_;
    numer = f.reduce(numer * conj);
    norm = f.reduce(norm * conj);
  }
  if (norm.is_zero()) throw ZeroDivisor("element has zero norm");
  return SymSqElem(field_, numer, norm);
}

SymSqElem operator/(const SymSqElem& lhs, const SymSqElem& rhs) { return lhs * rhs.inverse(); }

SymSqElem SymSqElem::pow(unsigned e) const {
  SymSqElem result(field_, MPoly(1));
  SymSqElem base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

SymSqElem SymSqElem::scaled(const Rat& c) const { return SymSqElem(field_, num_.scaled(c), den_, true); }

bool operator==(const SymSqElem& lhs, const SymSqElem& rhs) { return (lhs - rhs).is_zero(); }

SymSqElem SymSqElem::conjugate(bool flip1, bool flip2) const {
  std::vector<Term> terms = num_.terms();
  for (auto& t : terms) {
    const unsigned odd = (flip1 ? t.mono[Var::Y1] : 0U) + (flip2 ? t.mono[Var::Y2] : 0U);
    if (odd % 2 == 1) t.coeff = -t.coeff;
  }
  return SymSqElem(field_, MPoly::from_terms(std::move(terms)), den_, true);
}

std::string SymSqElem::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::ostringstream os;
  os << '(' << num_ << ")/(";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i > 0) os << '*';
    os << '(' << den_[i].atom << ')';
    if (den_[i].exp > 1) os << '^' << den_[i].exp;
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Coordinate bridges

SymSqElem abcd_to_xy(const MPoly& e, const FieldPtr& field) {
  const MPoly X1 = V(Var::X1), X2 = V(Var::X2), Y1 = V(Var::Y1), Y2 = V(Var::Y2);
  const std::vector<std::pair<Var, MPoly>> images = {
      {Var::a, (X1 + X2).scaled(Rat(1, 2))},
      {Var::b, (X1 - X2).pow(2).scaled(Rat(1, 4))},
      {Var::d, (Y1 + Y2).scaled(Rat(1, 2))},
  };
  const auto by_c = e.coefficients(Var::c);
  const unsigned top = static_cast<unsigned>(by_c.size()) - 1;
  MPoly num;
  for (unsigned k = 0; k < by_c.size(); ++k) {
    if (by_c[k].is_zero()) continue;
    num += by_c[k].compose(images) * field->reduce((Y1 - Y2).pow(k)) * (X1 - X2).pow(top - k);
  }
  if (top == 0) return SymSqElem(field, num);
  return SymSqElem(field, num, (X1 - X2).pow(top));
}

SymSqElem abcd_to_xy(const RatFn& e, const FieldPtr& field) {
  const SymSqElem num = abcd_to_xy(e.num(), field);
  if (e.is_polynomial()) return num.scaled(1 / e.den().constant_value());
  return num / abcd_to_xy(e.den(), field);
}

namespace {

// Takes a polynomial in a, b, c, d, s, checks it is even in s and sets s^2 = b.
MPoly from_s_coords(const MPoly& p) {
  for (const auto& t : p.terms())
    if (t.mono[Var::s] % 2 == 1) throw NotSymmetric("odd power of s in " + p.to_string());
  return p.reduce_power(Var::s, 2, V(Var::b));
}

MPoly to_s_coords(const MPoly& p) {
  const MPoly a = V(Var::a), s = V(Var::s), sc = V(Var::s) * V(Var::c), d = V(Var::d);
  return p.compose({{Var::X1, a + s}, {Var::X2, a - s}, {Var::Y1, d + sc}, {Var::Y2, d - sc}});
}

}  // namespace

MPoly xy_to_abcd(const MPoly& p) { return from_s_coords(to_s_coords(p)); }

MNPair build_MN(int genus) {
  const CurveParams params = CurveParams::symbolic(genus);
  const MPoly r1 = V(Var::Y1, 2) - curve_Q(params, Var::X1);
  const MPoly r2 = V(Var::Y2, 2) - curve_Q(params, Var::X2);
  // X1 - X2 = 2s in the bridge coordinates.
  auto m_s = to_s_coords(r1 - r2).divide_exact(2 * V(Var::s));
  if (!m_s) throw InternalError("M numerator not divisible by X1 - X2");
  const MPoly M = from_s_coords(*m_s);
  const MPoly N = xy_to_abcd(r1 + r2);
  return {M, N.scaled(Rat(-1, 2)) + V(Var::a) * M};
}

MPoly u_to_abcd(const MPoly& p) {
  return rename(p, {{Var::u2, Var::a}, {Var::u4, Var::b}, {Var::u5, Var::c}, {Var::u7, Var::d}});
}

RatFn u_to_abcd(const RatFn& f) {
  return rename(f, {{Var::u2, Var::a}, {Var::u4, Var::b}, {Var::u5, Var::c}, {Var::u7, Var::d}});
}

MPoly abcd_to_u(const MPoly& p) {
  return rename(p, {{Var::a, Var::u2}, {Var::b, Var::u4}, {Var::c, Var::u5}, {Var::d, Var::u7}});
}

SymSqElem pullback_u(const RatFn& f, const FieldPtr& field) { return abcd_to_xy(u_to_abcd(f), field); }

}  // namespace hekdv
