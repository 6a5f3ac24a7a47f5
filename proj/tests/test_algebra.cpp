#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace doa;
using P = ParamSymbol;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_EQ(parse_rat("-7"), Rat(-7));
  EXPECT_EQ(to_string(frac(-3, 6)), "-1/2");
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
}

TEST(Perm, CompositionActsRightToLeft) {
  Perm p = Perm::cycle(4, {1, 2}), q = Perm::cycle(4, {2, 3});
  Perm pq = compose(p, q);
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(pq(i), p(q(i)));
  EXPECT_EQ(pq(2), 3);
  EXPECT_TRUE(compose(pq, inverse(pq)).is_identity());
}

TEST(Perm, ParsePrintRoundTrip) {
  for (const auto& g : all_perms(5)) EXPECT_EQ(parse_perm(to_string(g), 5), g);
  EXPECT_EQ(to_string(Perm(4)), "()");
  EXPECT_EQ(parse_perm("(1 3 2)", 4), Perm::cycle(4, {1, 3, 2}));
}

TEST(Perm, GeneratorsGenerateSymmetricGroup) {
  for (int n : {4, 5}) {
    std::set<Perm> seen{Perm(n)};
    std::vector<Perm> frontier{Perm(n)};
    while (!frontier.empty()) {
      Perm g = frontier.back();
      frontier.pop_back();
      for (const auto& s : generators(n)) {
        Perm h = compose(s, g);
        if (seen.insert(h).second) frontier.push_back(h);
      }
    }
    EXPECT_EQ(seen.size(), all_perms(n).size());
    EXPECT_EQ(all_perms(n).size(), n == 4 ? 24u : 120u);
  }
}

TEST(Perm, CycleTypes) {
  EXPECT_TRUE(is_transposition(Perm::transposition(5, 2, 4)));
  EXPECT_TRUE(is_3cycle(Perm::cycle(5, {1, 2, 3})));
  EXPECT_TRUE(is_double_transposition(compose(Perm::transposition(4, 1, 2), Perm::transposition(4, 3, 4))));
  EXPECT_EQ(fixed_codim(Perm::transposition(4, 1, 2)), 2);
  EXPECT_EQ(fixed_codim(Perm::cycle(4, {1, 2, 3})), 4);
  EXPECT_THROW(require_n(3), DomainError);
}

TEST(Perm, ActionIsLeftAction) {
  auto ps = all_perms(4);
  for (const auto& g : ps)
    for (const auto& h : ps)
      for (const auto& b : basis(4)) EXPECT_EQ(act(g, act(h, b)), act(compose(g, h), b));
}

TEST(ParamPoly, GrevlexOrder) {
  Monomial a1 = Monomial::var(P::a1), a2 = Monomial::var(P::a2);
  EXPECT_GT(grevlex_cmp(a1, a2), 0);
  // degree first
  EXPECT_GT(grevlex_cmp(Monomial::var(P::c, 2), a1), 0);
  // a1*a3 > a2^2 in grevlex (smallest variable a3 appears)
  EXPECT_LT(grevlex_cmp(a1 * Monomial::var(P::a3), Monomial::var(P::a2, 2)), 0);
  ParamPoly p = sym(P::a2) + sym(P::a1) * sym(P::a1);
  EXPECT_EQ(to_string(p), "a1^2 + a2");
}

TEST(ParamPoly, RingAxiomsOnRandomPolys) {
  std::mt19937 rng(7);
  auto vars = std::vector<ParamSymbol>{P::a1, P::b3, P::alpha, P::c, P::aperp};
  for (int it = 0; it < 60; ++it) {
    ParamPoly p = oracle::random_poly(rng, vars, 4, 3), q = oracle::random_poly(rng, vars, 4, 3),
              r = oracle::random_poly(rng, vars, 3, 2);
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * q, q * p);
    EXPECT_TRUE((p - p).is_zero());
    NumericPoint pt = oracle::random_point(rng, {vars.begin(), vars.end()});
    EXPECT_EQ((p * q).eval(pt), p.eval(pt) * q.eval(pt));
  }
}

TEST(ParamPoly, ParsePrintRoundTrip) {
  std::mt19937 rng(11);
  auto vars = oracle::all_symbols();
  for (int it = 0; it < 80; ++it) {
    ParamPoly p = oracle::random_poly(rng, vars, 5, 3) * Rat(1, 1 + it % 4);
    EXPECT_EQ(parse_poly(to_string(p)), p) << to_string(p);
  }
}

TEST(ParamPoly, ParseErrors) {
  EXPECT_THROW(parse_poly("a1 +"), PolyParseError);
  EXPECT_THROW(parse_poly("zeta"), PolyParseError);
}

TEST(ParamPoly, SubstituteAndSpecialize) {
  ParamPoly p = sym(P::a) * sym(P::b) + Rat(2) * sym(P::c);
  Bindings b{{P::a, sym(P::aperp) * Rat(-1)}};
  EXPECT_EQ(p.substitute(b), Rat(-1) * sym(P::aperp) * sym(P::b) + Rat(2) * sym(P::c));
  NumericPoint pt{{P::a, Rat(2)}, {P::b, Rat(3)}, {P::c, Rat(1, 2)}};
  EXPECT_EQ(p.eval(pt), Rat(7));
  EXPECT_THROW(p.eval({{P::a, Rat(1)}}), UnboundSymbolError);
}

TEST(ParamPoly, NormalizeGenerator) {
  ParamPoly p = Rat(-3) * sym(P::a1) + Rat(6) * sym(P::b2);
  ParamPoly q = normalize_generator(p);
  EXPECT_EQ(q.leading_coefficient(), Rat(1));
  EXPECT_EQ(normalize_generator(Rat(5, 7) * p), q);
  EXPECT_THROW(normalize_generator(ParamPoly()), ZeroGeneratorError);
}

TEST(Vect, BarCoordinatesSplit) {
  const int n = 5;
  Vect v = Rat(3) * Vect(X(1)) + Rat(-1) * Vect(X(4)) + sym(P::a) * Vect(Y(2));
  auto [s, t] = to_bar_coords(v, n);
  EXPECT_EQ(s + t, v);
  ParamPoly sx, sy;
  for (const auto& [b, x] : s.coords()) (b.kind == Kind::X ? sx : sy) += x;
  EXPECT_TRUE(sx.is_zero());
  EXPECT_TRUE(sy.is_zero());
  for (const auto& g : generators(n)) EXPECT_EQ(act(g, t), t);
}

TEST(Vect, FixedSpaceMatchesResidual) {
  for (const auto& g : all_perms(4)) {
    auto fs = fixed_space(g);
    EXPECT_EQ(fs.codim, fixed_codim(g));
    for (const auto& f : fs.basis) {
      EXPECT_EQ(act(g, f), f);
      EXPECT_TRUE(fixed_space_residual(g, f).empty());
    }
  }
  Perm t = Perm::transposition(4, 1, 2);
  EXPECT_FALSE(fixed_space_residual(t, Vect(X(1))).empty());
}

TEST(InvariantForms, DimensionTwoAgreesWithReynoldsRank) {
  for (int n = 4; n <= 5; ++n) {
    EXPECT_EQ(invariant_two_form_dim(n), 2);
    EXPECT_EQ(oracle::reynolds_invariant_dim(n), 2);
  }
  for (int n = 6; n <= 8; ++n) EXPECT_EQ(invariant_two_form_dim(n), 2);
}

TEST(SymPoly, ProductIsCommutativeAndEquivariant) {
  SymPoly2 u = SymPoly2::linear(Vect(X(1)) + sym(P::a) * Vect(Y(3)));
  SymPoly2 v = SymPoly2::linear(Rat(2) * Vect(X(2))) + SymPoly2::constant(sym(P::c));
  EXPECT_EQ(sym_mul(u, v), sym_mul(v, u));
  for (const auto& g : generators(4)) EXPECT_EQ(act(g, sym_mul(u, v)), sym_mul(act(g, u), act(g, v)));
}
