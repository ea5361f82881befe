#include "hekdv/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "hekdv/errors.hpp"
#include "hekdv/memcap.hpp"

namespace hekdv {

namespace {

bool term_greater(const Term& lhs, const Term& rhs) { return lhs.mono > rhs.mono; }

// Hash-based term accumulator; the workhorse behind products and substitutions.
class Accumulator {
 public:
  explicit Accumulator(std::size_t hint = 0) { map_.reserve(hint); }

  void add(const Monomial& m, const Rat& c) {
    auto [it, inserted] = map_.try_emplace(m);
    if (inserted) {
      it->second = c;
      if ((map_.size() & 0xffff) == 0) check_term_budget(map_.size());
    } else {
      mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), c.get_mpq_t());
    }
  }

  void add_product(const Monomial& m, const Rat& c1, const Rat& c2) {
    auto [it, inserted] = map_.try_emplace(m);
    if (inserted) {
      mpq_mul(it->second.get_mpq_t(), c1.get_mpq_t(), c2.get_mpq_t());
      if ((map_.size() & 0xffff) == 0) check_term_budget(map_.size());
    } else {
      mpq_mul(tmp_.get_mpq_t(), c1.get_mpq_t(), c2.get_mpq_t());
      mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), tmp_.get_mpq_t());
    }
  }

  void add(const MPoly& p) {
    for (const auto& t : p.terms()) add(t.mono, t.coeff);
  }

  MPoly finish() {
    check_term_budget(map_.size());
    std::vector<Term> terms;
    terms.reserve(map_.size());
    for (auto& [m, c] : map_)
      if (sgn(c) != 0) terms.push_back(Term{m, std::move(c)});
    map_.clear();
    std::sort(terms.begin(), terms.end(), term_greater);
    return MPoly::from_terms(std::move(terms));
  }

 private:
  std::unordered_map<Monomial, Rat, MonomialHash> map_;
  Rat tmp_;
};

Monomial clear_var(Monomial m, Var v, unsigned keep = 0) {
  m.set(v, keep);
  return m;
}

}  // namespace

MPoly::MPoly(const Rat& c) {
  if (sgn(c) != 0) terms_.push_back(Term{Monomial{}, c});
}

MPoly MPoly::var(Var v, unsigned e) { return monomial(Monomial(v, e), Rat(1)); }

MPoly MPoly::monomial(const Monomial& m, const Rat& c) {
  MPoly p;
  if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  if (!std::is_sorted(terms.begin(), terms.end(), term_greater))
    std::sort(terms.begin(), terms.end(), term_greater);
  MPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rat MPoly::constant_value() const {
  if (!is_constant()) throw InternalError("constant_value of a non-constant polynomial");
  return terms_.empty() ? Rat(0) : terms_.front().coeff;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[v]);
  return d;
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
  return g;
}

MPoly MPoly::derivative(Var v) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned e = t.mono[v];
    if (e == 0) continue;
    out.push_back(Term{clear_var(t.mono, v, e - 1), t.coeff * e});
  }
  // Lex order is translation invariant, so the surviving terms stay sorted.
  MPoly p;
  p.terms_ = std::move(out);
  return p;
}

MPoly MPoly::coefficient(Var v, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono[v] == k) out.push_back(Term{clear_var(t.mono, v), t.coeff});
  return from_terms(std::move(out));
}

std::vector<MPoly> MPoly::coefficients(Var v) const {
  const unsigned deg = degree(v);
  std::vector<std::vector<Term>> buckets(deg + 1);
  for (const auto& t : terms_) buckets[t.mono[v]].push_back(Term{clear_var(t.mono, v), t.coeff});
  std::vector<MPoly> out;
  out.reserve(deg + 1);
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const { return compose({{v, value}}); }

MPoly MPoly::compose(const std::vector<std::pair<Var, MPoly>>& images) const {
  if (images.empty() || is_zero()) return *this;
  std::array<const MPoly*, kNumVars> image{};
  for (const auto& [v, p] : images) image[index_of(v)] = &p;

  // Group terms by the exponents of the substituted symbols.
  std::map<Monomial, std::vector<Term>, std::greater<>> groups;
  for (const auto& t : terms_) {
    Monomial key, rest = t.mono;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (image[i] && t.mono.exponent(i) > 0) {
        key.set(var_at(i), t.mono.exponent(i));
        rest.set(var_at(i), 0);
      }
    }
    groups[key].push_back(Term{rest, t.coeff});
  }

  std::array<std::vector<MPoly>, kNumVars> powers;
  auto power = [&](std::size_t i, unsigned e) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly(1));
    while (cache.size() <= e) cache.push_back(cache.back() * *image[i]);
    return cache[e];
  };

  Accumulator acc(terms_.size());
  for (auto& [key, group] : groups) {
    MPoly factor(1);
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (key.exponent(i) > 0) factor *= power(i, key.exponent(i));
    acc.add(from_terms(std::move(group)) * factor);
  }
  return acc.finish();
}

MPoly MPoly::reduce_power(Var v, unsigned n, const MPoly& replacement) const {
  if (n == 0) throw MalformedInput("reduce_power needs a positive exponent");
  MPoly current = *this;
  const bool self_referential = replacement.contains(v);
  std::vector<MPoly> powers{MPoly(1)};
  for (;;) {
    if (current.degree(v) < n) return current;
    std::map<unsigned, std::vector<Term>> groups;
    for (const auto& t : current.terms_) {
      const unsigned e = t.mono[v];
      groups[e / n].push_back(Term{clear_var(t.mono, v, e % n), t.coeff});
    }
    Accumulator acc(current.size());
    for (auto& [k, group] : groups) {
      while (powers.size() <= k) powers.push_back(powers.back() * replacement);
      acc.add(from_terms(std::move(group)) * powers[k]);
    }
    current = acc.finish();
    if (!self_referential) return current;
  }
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw MalformedInput("division by the zero polynomial");
  if (is_zero()) return MPoly{};
  if (divisor.size() == 1) {
    const Term& d = divisor.terms_.front();
    MPoly out;
    out.terms_.reserve(terms_.size());
    const Rat inv = 1 / d.coeff;
    for (const auto& t : terms_) {
      if (!d.mono.divides(t.mono)) return std::nullopt;
      out.terms_.push_back(Term{t.mono / d.mono, t.coeff * inv});
    }
    return out;
  }
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (divisor.degree(var_at(i)) > degree(var_at(i))) return std::nullopt;

  const Term& lead = divisor.terms_.front();
  const Rat lead_inv = 1 / lead.coeff;
  std::map<Monomial, Rat, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  std::vector<Term> quotient;
  Rat tmp;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    const Monomial qm = it->first / lead.mono;
    const Rat qc = it->second * lead_inv;
    rem.erase(it);
    for (std::size_t j = 1; j < divisor.terms_.size(); ++j) {
      const Term& dt = divisor.terms_[j];
      const Monomial m = qm * dt.mono;
      mpq_mul(tmp.get_mpq_t(), qc.get_mpq_t(), dt.coeff.get_mpq_t());
      auto [pos, inserted] = rem.try_emplace(m);
      if (inserted) {
        pos->second = -tmp;
      } else {
        pos->second -= tmp;
        if (sgn(pos->second) == 0) rem.erase(pos);
      }
    }
    quotient.push_back(Term{qm, qc});
  }
  MPoly out;
  out.terms_ = std::move(quotient);
  return out;
}

MPoly MPoly::divide_monomial(const Monomial& m) const {
  MPoly out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mono)) throw InternalError("divide_monomial: monomial does not divide");
    out.terms_.push_back(Term{t.mono / m, t.coeff});
  }
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::scaled(const Rat& c) const {
  if (sgn(c) == 0) return {};
  MPoly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto i = terms_.begin();
  auto j = rhs.terms_.begin();
  while (i != terms_.end() && j != rhs.terms_.end()) {
    if (i->mono > j->mono) {
      out.push_back(std::move(*i++));
    } else if (j->mono > i->mono) {
      out.push_back(*j++);
    } else {
      Rat c = i->coeff + j->coeff;
      if (sgn(c) != 0) out.push_back(Term{i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != rhs.terms_.end(); ++j) out.push_back(*j);
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) { return *this += -rhs; }

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const MPoly& small = lhs.size() <= rhs.size() ? lhs : rhs;
  const MPoly& big = lhs.size() <= rhs.size() ? rhs : lhs;
  if (small.size() == 1) {
    // Multiplying by a monomial preserves the term order.
    const Term& m = small.terms_.front();
    MPoly out;
    out.terms_.reserve(big.size());
    for (const auto& t : big.terms_) out.terms_.push_back(Term{t.mono * m.mono, t.coeff * m.coeff});
    return out;
  }
  Accumulator acc(4 * (small.size() + big.size()));
  for (const auto& ts : small.terms_)
    for (const auto& tb : big.terms_) acc.add_product(ts.mono * tb.mono, ts.coeff, tb.coeff);
  return acc.finish();
}

bool operator==(const MPoly& lhs, const MPoly& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i)
    if (!(lhs.terms_[i].mono == rhs.terms_[i].mono) || lhs.terms_[i].coeff != rhs.terms_[i].coeff)
      return false;
  return true;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(var_at(i));
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << hekdv::to_string(c);
    } else if (c == 1) {
      os << mono;
    } else {
      os << hekdv::to_string(c) << "*" << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

MPoly operator+(const MPoly& p, long c) { return p + MPoly(c); }
MPoly operator-(const MPoly& p, long c) { return p - MPoly(c); }
MPoly operator*(long c, const MPoly& p) { return p.scaled(Rat(c)); }

MPoly rename(const MPoly& p, const std::vector<std::pair<Var, Var>>& mapping) {
  std::vector<std::pair<Var, MPoly>> images;
  images.reserve(mapping.size());
  for (const auto& [from, to] : mapping) images.emplace_back(from, MPoly::var(to));
  return p.compose(images);
}

}  // namespace hekdv
