#include <doctest.h>

#include <random>

#include "hekdv/curve.hpp"
#include "hekdv/derivation.hpp"
#include "hekdv/errors.hpp"
#include "hekdv/symsq.hpp"
#include "hekdv/upoly.hpp"

using namespace hekdv;

namespace {

std::mt19937 rng(7);

const MPoly X1 = V(Var::X1), X2 = V(Var::X2), Y1 = V(Var::Y1), Y2 = V(Var::Y2);

FieldPtr g3() {
  static const FieldPtr f = SymSqField::make(CurveParams::symbolic(3));
  return f;
}

SymSqElem el(const FieldPtr& f, const std::string& num, const std::string& den = "1") {
  return SymSqElem(f, parse_poly(num), parse_poly(den));
}

// Determinant of the Sylvester matrix by plain Gaussian elimination.
Rat sylvester_resultant(const UPoly& p, const UPoly& q) {
  const int m = upoly::degree(p), n = upoly::degree(q);
  const int size = m + n;
  std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = p[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = q[n - k];
  Rat det = 1;
  for (int col = 0; col < size; ++col) {
    int piv = col;
    while (piv < size && sgn(s[piv][col]) == 0) ++piv;
    if (piv == size) return 0;
    if (piv != col) {
      std::swap(s[piv], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (int r = col + 1; r < size; ++r) {
      const Rat f = s[r][col] / s[col][col];
      for (int k = col; k < size; ++k) s[r][k] -= f * s[col][k];
    }
  }
  return det;
}

MPoly random_xy_poly() {
  std::uniform_int_distribution<int> n(1, 6), e(0, 3), c(-5, 5);
  std::vector<Term> terms;
  const int count = n(rng);
  for (int i = 0; i < count; ++i) {
    Monomial m;
    for (Var v : {Var::X1, Var::Y1, Var::X2, Var::Y2, Var::y4}) m.set(v, static_cast<unsigned>(e(rng)));
    terms.push_back({m, Rat(c(rng))});
  }
  return MPoly::from_terms(std::move(terms));
}

MPoly swap_points(const MPoly& p) {
  return p.compose({{Var::X1, X2}, {Var::X2, X1}, {Var::Y1, Y2}, {Var::Y2, Y1}});
}

}  // namespace

TEST_CASE("curve_Q") {
  CHECK(curve_Q(CurveParams::symbolic(3), Var::x) ==
        parse_poly("x^7 + y4*x^5 - y6*x^4 + y8*x^3 - y10*x^2 + y12*x - y14"));
  CHECK(curve_Q(CurveParams::numeric(3, {0, 0, 0, 0, 0, 0}), Var::x) == V(Var::x, 7));
  CHECK(curve_Q(CurveParams::symbolic(2), Var::X1) == parse_poly("X1^5 + y4*X1^3 - y6*X1^2 + y8*X1 - y10"));
  CHECK(curve_Q(CurveParams::degenerate_v32(), Var::x) == V(Var::x, 2) * curve_Q(CurveParams::symbolic(2), Var::x));
  CHECK_THROWS_AS(CurveParams::symbolic(4), IncompatibleGenus);
  CHECK_THROWS_AS(CurveParams::numeric(2, {1, 2, 3}), MalformedInput);
}

TEST_CASE("in_Bg") {
  CHECK_FALSE(in_Bg(CurveParams::numeric(3, {0, 0, 0, 0, 0, 0})));
  CHECK(in_Bg(CurveParams::numeric(3, {0, 0, 0, 0, 0, 1})));
  CHECK(in_Bg(CurveParams::numeric(2, {0, 0, 0, 1})));
  CHECK_THROWS_AS(in_Bg(CurveParams::symbolic(3)), ModeError);

  // X^5 - 5X + 4 has a double root at 1 (y8 = -5, y10 = -4).
  CHECK_FALSE(in_Bg(CurveParams::numeric(2, {0, 0, -5, -4})));

  SUBCASE("resultant agrees with the Sylvester determinant") {
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rat> ys(6);
      for (auto& y : ys) y = c(rng);
      const UPoly q = upoly::from_mpoly(curve_Q(CurveParams::numeric(3, ys), Var::x), Var::x);
      const UPoly dq = upoly::derivative(q);
      CHECK(upoly::resultant(q, dq) == sylvester_resultant(q, dq));
      CHECK(in_Bg(CurveParams::numeric(3, ys)) == (upoly::degree(upoly::gcd(q, dq)) == 0));
    }
  }
}

TEST_CASE("dr_numerator") {
  CHECK(dr_numerator(2, 1, Var::x) == parse_poly("-x^2"));
  CHECK(dr_numerator(2, 2, Var::x) == parse_poly("-y4*x - 3*x^3"));
  CHECK(dr_numerator(3, 1, Var::x) == parse_poly("-x^3"));
  CHECK(dr_numerator(3, 2, Var::x) == parse_poly("-(y4*x^2 + 3*x^4)"));
  CHECK(dr_numerator(3, 3, Var::x) == parse_poly("-(y8*x - 2*y6*x^2 + 3*y4*x^3 + 5*x^5)"));
  CHECK_THROWS_AS(dr_numerator(3, 4, Var::x), IndexError);
  CHECK_THROWS_AS(dr_numerator(3, 0, Var::x), IndexError);
}

TEST_CASE("reduce_Y") {
  const CurveParams p = CurveParams::symbolic(3);
  const MPoly q1 = curve_Q(p, Var::X1), q2 = curve_Q(p, Var::X2);
  CHECK(reduce_Y(V(Var::Y1, 2), p) == q1);
  CHECK(reduce_Y(V(Var::Y1, 3), p) == Y1 * q1);
  CHECK(reduce_Y(V(Var::Y1, 2) * V(Var::Y2, 2), p) == q1 * q2);
  for (int trial = 0; trial < 20; ++trial) {
    const MPoly r = reduce_Y(random_xy_poly(), p);
    CHECK(r.degree(Var::Y1) <= 1);
    CHECK(r.degree(Var::Y2) <= 1);
    CHECK(reduce_Y(r, p) == r);
  }
}

TEST_CASE("coordinate bridges") {
  const FieldPtr f = g3();
  CHECK(abcd_to_xy(parse_poly("a^2 - b"), f) == SymSqElem(f, X1 * X2));
  CHECK(abcd_to_xy(V(Var::a), f).num() == (X1 + X2).scaled(Rat(1, 2)));

  // cd = (Y1^2 - Y2^2)/(2(X1 - X2)) reduces to a polynomial.
  const SymSqElem cd = abcd_to_xy(parse_poly("c*d"), f);
  CHECK(cd.den_factors().empty());
  const auto quotient = (f->Q(1) - f->Q(2)).divide_exact(2 * (X1 - X2));
  REQUIRE(quotient.has_value());
  CHECK(cd.num() == *quotient);

  CHECK(xy_to_abcd(X1 + X2) == 2 * V(Var::a));
  CHECK(xy_to_abcd(X1 * X2) == parse_poly("a^2 - b"));
  CHECK(xy_to_abcd(Y1 * Y2) == parse_poly("d^2 - b*c^2"));
  CHECK_THROWS_AS(xy_to_abcd(X1), NotSymmetric);

  SUBCASE("abcd_to_xy inverts xy_to_abcd on symmetric polynomials") {
    for (int trial = 0; trial < 15; ++trial) {
      const MPoly p = random_xy_poly();
      const MPoly sym = p + swap_points(p);
      CHECK(abcd_to_xy(xy_to_abcd(sym), f) == SymSqElem(f, sym));
    }
  }
}

TEST_CASE("build_MN reproduces the printed polynomials") {
  const auto [m3, n3] = build_MN(3);
  CHECK(m3 == parse_poly("2*c*d-7*a^6-35*a^4*b-21*a^2*b^2-b^3-y4*(5*a^4+10*a^2*b+b^2)+4*y6*(a^3+a*b)"
                         "-y8*(3*a^2+b)+2*y10*a-y12"));
  CHECK(n3 == parse_poly("-d^2-b*c^2+2*a*c*d-6*a^7-14*a^5*b+14*a^3*b^2+6*a*b^3-4*y4*(a^5-a*b^2)"
                         "+y6*(3*a^4-2*a^2*b-b^2)-2*y8*(a^3-a*b)+y10*(a^2-b)-y14"));
  const auto [m2, n2] = build_MN(2);
  CHECK(m2 == parse_poly("-5*a^4-10*a^2*b-b^2+2*c*d-y4*(3*a^2+b)+2*y6*a-y8"));
  CHECK(n2 == parse_poly("-4*a^5+4*a*b^2-c^2*b+2*a*c*d-d^2+2*y4*(-a^3+a*b)+y6*(a^2-b)-y10"));

  // Both lie in the rewriting ideal: their pullbacks vanish on the curve.
  CHECK(abcd_to_xy(m3, g3()).is_zero());
  CHECK(abcd_to_xy(n3, g3()).is_zero());
  CHECK(abcd_to_xy(m2, genus2_field()).is_zero());
  CHECK(abcd_to_xy(n2, genus2_field()).is_zero());

  // A perturbed coefficient no longer vanishes.
  CHECK_FALSE(abcd_to_xy(m3 + V(Var::a, 6), g3()).is_zero());
}

TEST_CASE("field arithmetic") {
  const FieldPtr f = g3();
  const SymSqElem y1(f, Y1), x(f, X1 - X2);
  const SymSqElem c = abcd_to_xy(V(Var::c), f);
  CHECK(c * x == SymSqElem(f, Y1 - Y2));
  CHECK(y1 * y1 == SymSqElem(f, f->Q(1)));
  CHECK(y1.inverse() == SymSqElem(f, Y1, f->Q(1)));
  const SymSqElem mixed(f, Y1 + X2 * Y2 + Y1 * Y2 + 1);
  CHECK(mixed * mixed.inverse() == SymSqElem(f, MPoly(1)));
  CHECK((mixed / mixed) == SymSqElem(f, MPoly(1)));
  CHECK_THROWS_AS(SymSqElem::zero(f).inverse(), ZeroDivisor);
  CHECK_THROWS_AS(SymSqElem(f, X1, Y1), MalformedInput);
  CHECK((SymSqElem(f, X1 * X1 - X2 * X2, X1 - X2)).den_factors().empty());
}

TEST_CASE("derivations") {
  const FieldPtr f = g3();
  const Derivation D1 = make_derivation(DerivationKind::D1, f);
  const Derivation L3 = make_derivation(DerivationKind::LLow, f);
  const Derivation L5 = make_derivation(DerivationKind::LHigh, f);
  const Derivation T1 = make_derivation(DerivationKind::T1, f);
  const Derivation T3 = make_derivation(DerivationKind::T3, f);

  CHECK(derive(D1, SymSqElem(f, X1)) == SymSqElem(f, 2 * Y1));

  SUBCASE("printed T-images") {
    const std::string diff = "(X1 - X2)";
    CHECK(T1.image(Var::X1) == el(f, "-2*Y1", "X1*" + diff));
    CHECK(T1.image(Var::Y1) == SymSqElem(f, -f->dQ(1), X1 * (X1 - X2)));
    CHECK(T1.image(Var::X2) == el(f, "2*Y2", "X2*" + diff));
    CHECK(T1.image(Var::Y2) == SymSqElem(f, f->dQ(2), X2 * (X1 - X2)));
    CHECK(T3.image(Var::X1) == el(f, "2*X2*Y1", "X1*" + diff));
    CHECK(T3.image(Var::X2) == el(f, "-2*X1*Y2", "X2*" + diff));
  }

  SUBCASE("T-derivations are the stated combinations of L3, L5") {
    const SymSqElem inv_prod(f, MPoly(1), X1 * X2), sum(f, X1 + X2);
    for (Var v : {Var::X1, Var::Y1, Var::X2, Var::Y2}) {
      CHECK(T1.image(v) == -(L5.image(v) * inv_prod));
      CHECK(T3.image(v) == L3.image(v) + sum * inv_prod * L5.image(v));
    }
  }

  SUBCASE("compatibility with the curve") {
    for (auto kind : {DerivationKind::D1, DerivationKind::D2, DerivationKind::LLow, DerivationKind::LHigh,
                      DerivationKind::T1, DerivationKind::T3}) {
      const auto defect = compatibility_defect(make_derivation(kind, f));
      CHECK(defect[0].is_zero());
      CHECK(defect[1].is_zero());
    }
    for (auto kind : {DerivationKind::L1G2, DerivationKind::L3G2}) {
      const auto defect = compatibility_defect(make_derivation(kind, genus2_field()));
      CHECK(defect[0].is_zero());
      CHECK(defect[1].is_zero());
    }
    Derivation broken = T1;
    broken.images[1] = broken.images[1] + SymSqElem(f, MPoly(1));
    CHECK_FALSE(compatibility_defect(broken)[0].is_zero());
  }

  SUBCASE("actions on generators") {
    CHECK(derive(L3, abcd_to_xy(V(Var::a), f)) == abcd_to_xy(-V(Var::c), f));
    CHECK(derive(T1, abcd_to_xy(V(Var::a), f)) == pullback_u(parse_ratfn("(u2*u5 - u7)/(u4 - u2^2)"), f));
  }

  SUBCASE("commutators vanish on generators") {
    const Derivation D2 = make_derivation(DerivationKind::D2, f);
    for (Var v : {Var::X1, Var::Y1, Var::X2, Var::Y2}) {
      const SymSqElem g(f, V(v));
      CHECK(commutator(L3, L5, g).is_zero());
      CHECK(commutator(T1, T3, g).is_zero());
      CHECK(commutator(D1, D2, g).is_zero());
    }
    // D1 and L3 do not commute.
    CHECK_FALSE(commutator(D1, L3, SymSqElem(f, X1)).is_zero());
  }

  SUBCASE("genus-2 operators") {
    const FieldPtr f2 = genus2_field();
    // L1 = (1/(X1 - X2)) (-2 Y1 d/dX1 + 2 Y2 d/dX2) on X-functions.
    const Derivation L1 = make_derivation(DerivationKind::L1G2, f2);
    CHECK(derive(L1, SymSqElem(f2, X1)) == el(f2, "-2*Y1", "X1 - X2"));
    CHECK(derive(L1, SymSqElem(f2, X2)) == el(f2, "2*Y2", "X1 - X2"));
    CHECK_THROWS_AS(make_derivation(DerivationKind::T1, f2), IncompatibleGenus);
    CHECK_THROWS_AS(make_derivation(DerivationKind::L1G2, f), IncompatibleGenus);
  }
}

TEST_CASE("quotient rule") {
  const FieldPtr f = g3();
  const Derivation T1 = make_derivation(DerivationKind::T1, f);
  const SymSqElem p(f, X1 * Y2 + X2 * X2), q(f, X1 + Y1 * Y2);
  CHECK(derive(T1, p / q) == (derive(T1, p) * q - p * derive(T1, q)) / (q * q));
  CHECK(derive(T1, p * q) == derive(T1, p) * q + p * derive(T1, q));
}

TEST_CASE("psi maps") {
  const FieldPtr f2 = genus2_field(), f32 = v32_field();
  const SymSqElem y1(f2, Y1);
  CHECK(psi2(psi1(y1, f32), f2) == y1);
  CHECK(psi1(SymSqElem(f2, X1), f32) == SymSqElem(f32, X1));
  CHECK(psi1(y1, f32) == el(f32, "Y1", "X1"));
  // c of the genus-2 field goes to (ac - d)/(a^2 - b) in genus-3 coordinates.
  CHECK(psi1(abcd_to_xy(V(Var::c), f2), f32) == abcd_to_xy(parse_ratfn("(a*c - d)/(a^2 - b)"), f32));
  CHECK_THROWS_AS(psi1(y1, f2), IncompatibleGenus);
}
