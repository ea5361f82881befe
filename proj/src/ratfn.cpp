#include "hekdv/ratfn.hpp"

#include <array>
#include <cctype>
#include <map>

#include "hekdv/errors.hpp"

namespace hekdv {

namespace {

// Divisibility probing is only attempted for modest denominators.
constexpr std::size_t kProbeLimit = 4000;

}  // namespace

RatFn::RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFn::normalize() {
  if (den_.is_zero()) throw MalformedInput("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  const Rat lc = den_.leading_term().coeff;
  if (lc != 1) {
    const Rat inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  const Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
  if (!g.is_one()) {
    num_ = num_.divide_monomial(g);
    den_ = den_.divide_monomial(g);
  }
  if (den_.size() > 1 && den_.size() <= kProbeLimit && num_.size() <= kProbeLimit) {
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = MPoly(1);
    }
  }
}

RatFn operator+(const RatFn& lhs, const RatFn& rhs) {
  if (lhs.is_zero()) return rhs;
  if (rhs.is_zero()) return lhs;
  if (lhs.den_ == rhs.den_) return RatFn(lhs.num_ + rhs.num_, lhs.den_);
  if (lhs.den_.size() <= kProbeLimit && rhs.den_.size() <= kProbeLimit) {
    if (lhs.den_.size() >= rhs.den_.size()) {
      if (auto q = lhs.den_.divide_exact(rhs.den_)) return RatFn(lhs.num_ + rhs.num_ * *q, lhs.den_);
    } else {
      if (auto q = rhs.den_.divide_exact(lhs.den_)) return RatFn(lhs.num_ * *q + rhs.num_, rhs.den_);
    }
  }
  return RatFn(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

RatFn operator*(const RatFn& lhs, const RatFn& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return RatFn();
  // Cheap cross-cancellation when a numerator equals the other denominator.
  if (lhs.num_ == rhs.den_) return RatFn(rhs.num_, lhs.den_);
  if (rhs.num_ == lhs.den_) return RatFn(lhs.num_, rhs.den_);
  return RatFn(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
}

RatFn operator/(const RatFn& lhs, const RatFn& rhs) {
  if (rhs.is_zero()) throw MalformedInput("division by the zero rational function");
  return lhs * RatFn(rhs.den_, rhs.num_);
}

RatFn RatFn::derivative(Var v) const {
  if (den_.is_constant()) return RatFn(num_.derivative(v), den_);
  const MPoly dd = den_.derivative(v);
  if (dd.is_zero()) return RatFn(num_.derivative(v), den_);
  return RatFn(num_.derivative(v) * den_ - num_ * dd, den_ * den_);
}

RatFn RatFn::substitute(Var v, const RatFn& value) const { return compose({{v, value}}); }

RatFn RatFn::compose(const std::vector<std::pair<Var, RatFn>>& images) const {
  return compose_rational(num_, images) / compose_rational(den_, images);
}

RatFn RatFn::cancel(const MPoly& factor) const {
  MPoly n = num_, d = den_;
  for (;;) {
    auto qn = n.divide_exact(factor);
    if (!qn) break;
    auto qd = d.divide_exact(factor);
    if (!qd) break;
    n = std::move(*qn);
    d = std::move(*qd);
  }
  return RatFn(std::move(n), std::move(d));
}

RatFn RatFn::pow(unsigned e) const { return RatFn(num_.pow(e), den_.pow(e)); }

std::string RatFn::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool ratfn_equal(const RatFn& f, const RatFn& g) {
  if (f.den() == g.den()) return f.num() == g.num();
  return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

std::ostream& operator<<(std::ostream& os, const RatFn& f) { return os << f.to_string(); }

RatFn compose_rational(const MPoly& p, const std::vector<std::pair<Var, RatFn>>& images) {
  if (images.empty() || p.is_zero()) return RatFn(p);
  std::array<const RatFn*, kNumVars> image{};
  std::array<unsigned, kNumVars> top{};
  for (const auto& [v, f] : images) {
    image[index_of(v)] = &f;
    top[index_of(v)] = p.degree(v);
  }

  std::map<Monomial, std::vector<Term>, std::greater<>> groups;
  for (const auto& t : p.terms()) {
    Monomial key, rest = t.mono;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (image[i]) {
        key.set(var_at(i), t.mono.exponent(i));
        rest.set(var_at(i), 0);
      }
    }
    groups[key].push_back(Term{rest, t.coeff});
  }

  std::array<std::vector<MPoly>, kNumVars> num_pow, den_pow;
  auto cached = [](std::vector<MPoly>& cache, const MPoly& base, unsigned e) -> const MPoly& {
    if (cache.empty()) cache.push_back(MPoly(1));
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };

  MPoly num;
  for (auto& [key, group] : groups) {
    MPoly factor(1);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (!image[i]) continue;
      const unsigned e = key.exponent(i);
      if (e > 0) factor *= cached(num_pow[i], image[i]->num(), e);
      if (top[i] > e) factor *= cached(den_pow[i], image[i]->den(), top[i] - e);
    }
    num += MPoly::from_terms(std::move(group)) * factor;
  }
  MPoly den(1);
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (image[i] && top[i] > 0) den *= image[i]->den().pow(top[i]);
  return RatFn(std::move(num), std::move(den));
}

RatFn rename(const RatFn& f, const std::vector<std::pair<Var, Var>>& mapping) {
  return RatFn(rename(f.num(), mapping), rename(f.den(), mapping));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFn parse() {
    RatFn value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedInput("cannot parse expression at offset " + std::to_string(pos_) + " (" + what +
                         "): '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFn expression() {
    RatFn value = product();
    for (;;) {
      if (accept('+')) {
        value += product();
      } else if (accept('-')) {
        value -= product();
      } else {
        return value;
      }
    }
  }

  RatFn product() {
    RatFn value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        value = value / unary();
      } else {
        return value;
      }
    }
  }

  RatFn unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFn power() {
    RatFn base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  RatFn atom() {
    if (accept('(')) {
      RatFn value = expression();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFn(MPoly(Rat(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      const auto v = var_from_name(name);
      if (!v) fail("unknown symbol " + std::string(name));
      return RatFn(MPoly::var(*v));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFn parse_ratfn(std::string_view text) { return Parser(text).parse(); }

MPoly parse_poly(std::string_view text) {
  const RatFn f = parse_ratfn(text);
  if (!f.is_polynomial()) throw MalformedInput("expected a polynomial: '" + std::string(text) + "'");
  return f.num().scaled(1 / f.den().constant_value());
}

}  // namespace hekdv
