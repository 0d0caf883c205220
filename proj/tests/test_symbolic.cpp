#include <gtest/gtest.h>

#include "nilva/symbolic.hpp"

using namespace nilva;
using namespace nilva::sym;

namespace {

SymGen g(Kind k, int i, const Affine& m) { return {k, static_cast<std::uint8_t>(i), m}; }
Affine v(int i) { return Affine::var(i); }
Affine c(std::int64_t x) { return Affine::constant(x); }

Scalar coefficient(const Expansion& e, const Monomial& m) {
  Scalar s;
  for (const auto& [key, val] : e) {
    if (key.mono == m) s += val;
  }
  return s;
}

Generator x3(std::int64_t n) { return {Kind::X, 3, n}; }
Generator x1(std::int64_t n) { return {Kind::X, 1, n}; }

}  // namespace

TEST(Affine, Arithmetic) {
  Affine a = v(0) + Affine(2 * v(1)) - c(3);
  EXPECT_EQ(a.str(), "v0+2*v1-3");
  a.substitute(0, v(1) + c(1));
  EXPECT_EQ(a.str(), "3*v1-2");
  a.remove_var(0);
  EXPECT_EQ(a.str(), "3*v0-2");
  EXPECT_EQ(a.shifted(2).str(), "3*v2-2");
}

TEST(Constrain, EliminatesUnitVariable) {
  Term t;
  t.coeff = 1;
  t.nvars = 2;
  t.gens = {g(Kind::X, 1, v(0)), g(Kind::X, 3, v(1))};
  ASSERT_TRUE(constrain(t, v(0) + v(1) - c(5)));
  EXPECT_EQ(t.nvars, 1);
  EXPECT_EQ(t.gens[0].mode.str(), "-v0+5");
  EXPECT_EQ(t.gens[1].mode.str(), "v0");
}

TEST(Constrain, GcdAndUnsolvable) {
  Term t;
  t.coeff = 1;
  t.nvars = 2;
  t.gens = {g(Kind::X, 1, v(0))};
  Term u = t;
  EXPECT_FALSE(constrain(u, Affine(2 * v(0)) + Affine(4 * v(1)) - c(1)));
  u = t;
  EXPECT_TRUE(constrain(u, Affine(2 * v(0)) + Affine(4 * v(1)) - c(2)));
  u = t;
  EXPECT_THROW(constrain(u, Affine(2 * v(0)) + Affine(3 * v(1)) - c(1)), std::runtime_error);
}

TEST(Expand, ReciprocalOfZeroKillsTerm) {
  // sum_l x1_l / l: the l = 0 instance must vanish, not divide by zero.
  Term t;
  t.coeff = 1;
  t.nvars = 1;
  t.factors = {{v(0), -1}};
  t.gens = {g(Kind::X, 1, v(0))};
  Expansion e;
  expand_term(t, {}, e);
  EXPECT_EQ(coefficient(e, {x1(0)}), Scalar(0));
  EXPECT_EQ(coefficient(e, {x1(3)}), Scalar(1, 3));
  EXPECT_EQ(coefficient(e, {x1(-12)}), Scalar(-1, 12));
  EXPECT_EQ(e.count(CellMono{{0, 0}, {0, 0}, {x1(0)}}), 0u);
}

TEST(Expand, ConvolutionCollectsMatchingInstances) {
  // sum_l x3_{1+l} x3_{2-l} / l: x3_0 x3_3 arises from l = -1 and l = 2.
  Term t;
  t.coeff = 1;
  t.nvars = 1;
  t.factors = {{v(0), -1}};
  t.gens = {g(Kind::X, 3, v(0) + c(1)), g(Kind::X, 3, c(2) - v(0))};
  Expansion e;
  expand_term(t, {}, e);
  EXPECT_EQ(coefficient(e, {x3(0), x3(3)}), Scalar(-1) + Scalar(1, 2));
  // Brute force over l for every monomial in a small range.
  for (std::int64_t a = -5; a <= 5; ++a) {
    const std::int64_t b = 3 - a;
    if (a > b) continue;
    Scalar want;
    for (std::int64_t l = -20; l <= 20; ++l) {
      if (l == 0) continue;
      const std::int64_t m1 = 1 + l, m2 = 2 - l;
      if ((m1 == a && m2 == b) || (m1 == b && m2 == a)) want += Scalar(1, l);
    }
    EXPECT_EQ(coefficient(e, {x3(a), x3(b)}), want) << a;
  }
}

TEST(Expand, UnboundedSumThrows) {
  Term t;
  t.coeff = 1;
  t.nvars = 1;
  t.gens = {g(Kind::W, 1, {})};
  Expansion e;
  EXPECT_THROW(expand_term(t, {}, e), std::runtime_error);
  ExpandBounds b;
  b.bound_powers = true;
  b.power_window = 3;
  t.power[0] = v(0);
  Expansion e2;
  expand_term(t, b, e2);
  EXPECT_EQ(e2.size(), 7u);
}

TEST(Expand, ModeWindowTruncatesPerMonomial) {
  Term t;
  t.coeff = 2;
  t.nvars = 1;
  t.gens = {g(Kind::X, 1, v(0))};
  ExpandBounds b;
  b.mode_window = 4;
  Expansion e;
  expand_term(t, b, e);
  EXPECT_EQ(e.size(), 9u);
  for (const auto& [k, val] : e) EXPECT_EQ(val, Scalar(2));
}

TEST(MultiplyTerms, RenumbersVariables) {
  Term a, b;
  a.coeff = 2;
  a.nvars = 1;
  a.gens = {g(Kind::X, 1, v(0))};
  b.coeff = Scalar(1, 3);
  b.nvars = 1;
  b.gens = {g(Kind::X, 3, v(0))};
  b.power[0] = c(-1);
  b.logdeg[1] = 1;
  const Term m = multiply_terms(a, b);
  EXPECT_EQ(m.nvars, 2);
  EXPECT_EQ(m.coeff, Scalar(2, 3));
  EXPECT_EQ(m.gens[1].mode.str(), "v1");
  EXPECT_EQ(m.power[0].k, -1);
  EXPECT_EQ(m.logdeg[1], 1);
}
