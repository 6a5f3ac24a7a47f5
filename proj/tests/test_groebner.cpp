#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace doa;
using P = ParamSymbol;

namespace {

ParamPoly V(P s) { return sym(s); }

/// Every S-polynomial of the basis reduces to zero, and every input reduces to zero.
void expect_groebner(const GroebnerBasis& gb, const std::vector<ParamPoly>& inputs) {
  const auto& G = gb.generators;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      EXPECT_TRUE(detail::reduce(detail::spoly(G[i], G[j]), G, true).is_zero()) << to_string(G[i]) << " / " << to_string(G[j]);
  for (const auto& p : inputs) EXPECT_TRUE(ideal_member(p, gb)) << to_string(p);
}

/// Coordinates of a degree-2 form on the monomials of degree 2.
std::map<Monomial, Rat, GrevlexGreater> coords(const ParamPoly& p) {
  std::map<Monomial, Rat, GrevlexGreater> m;
  for (const auto& t : p.terms()) m[t.m] = t.c;
  return m;
}

/// Degree-2 membership by linear algebra: for an ideal generated in degrees 1
/// and 2, I_2 is spanned by the quadrics and by variable multiples of the linear forms.
bool member_deg2(const std::vector<ParamPoly>& gens, const std::vector<ParamSymbol>& vars, const ParamPoly& q) {
  std::vector<ParamPoly> span;
  for (const auto& g : gens) {
    if (g.degree() == 2) span.push_back(g);
    if (g.degree() == 1)
      for (auto v : vars) span.push_back(g * sym(v));
  }
  std::map<Monomial, int, GrevlexGreater> col;
  for (const auto& p : span)
    for (const auto& t : p.terms()) col.try_emplace(t.m, 0);
  for (const auto& t : q.terms()) col.try_emplace(t.m, 0);
  int c = 0;
  for (auto& [m, i] : col) i = c++;
  auto row = [&](const ParamPoly& p) {
    std::vector<Rat> r(col.size());
    for (const auto& [m, x] : coords(p)) r[col[m]] = x;
    return r;
  };
  std::vector<std::vector<Rat>> M;
  for (const auto& p : span) M.push_back(row(p));
  int r0 = oracle::rank(M);
  M.push_back(row(q));
  return oracle::rank(M) == r0;
}

}  // namespace

TEST(Groebner, TextbookExample) {
  // x^2 - y, x y - 1 over a1 > a2: the basis contains a2^3 - 1 after reduction
  ParamPoly x = V(P::a1), y = V(P::a2);
  std::vector<ParamPoly> F{x * x - y, x * y - ParamPoly(1)};
  GroebnerBasis gb = buchberger(F);
  expect_groebner(gb, F);
  EXPECT_TRUE(ideal_member(y * y * y - ParamPoly(1), gb));
  EXPECT_FALSE(ideal_member(y - ParamPoly(1), gb));
}

TEST(Groebner, UnitIdealDetected) {
  ParamPoly x = V(P::a1);
  GroebnerBasis gb = buchberger({x, x + ParamPoly(1)});
  EXPECT_TRUE(gb.contains_one());
}

TEST(Groebner, RandomIdealsAreClosed) {
  std::mt19937 rng(17);
  std::vector<ParamSymbol> vars{P::a1, P::a2, P::b1, P::alpha};
  for (int it = 0; it < 12; ++it) {
    std::vector<ParamPoly> F;
    for (int k = 0; k < 3; ++k) F.push_back(oracle::random_poly(rng, vars, 3, 2, it % 2 == 0));
    GroebnerBasis gb = buchberger(F);
    expect_groebner(gb, F);
  }
}

TEST(Groebner, LedgerIdealsAreClosed) {
  auto F = paper_ledger("Obstr2PhiC1C2C3L2", 4).generators;
  expect_groebner(buchberger(F), F);
  auto G = paper_ledger(std::vector<std::string>{"Obstr1SimplifiedFinal", "CrefRelations"}, 4).generators;
  expect_groebner(buchberger(G), G);
}

TEST(Groebner, TruncatedMembershipMatchesLinearAlgebra) {
  // degree-2 membership from the degree-truncated basis versus plain rank tests
  auto sys = paper_ledger(std::vector<std::string>{"Obstr1", "CrefRelations", "DoubledStdRep"}, 4);
  std::vector<ParamSymbol> vars;
  for (auto s : sys.symbols()) vars.push_back(s);
  std::vector<ParamPoly> probes;
  for (int i = 1; i <= 7; ++i) {
    probes.push_back(sym(a_sym(i)) * sym(a_sym(i)));
    probes.push_back(sym(a_sym(i)) * sym(b_sym(i)));
  }
  std::mt19937 rng(4);
  for (int k = 0; k < 10; ++k) probes.push_back(oracle::random_poly(rng, vars, 3, 2, true));
  // quadrics assembled from the generators are members by construction
  ParamPoly built;
  for (const auto& g : sys.generators) {
    if (g.degree() == 1) built += g * sym(P::b3);
    if (g.degree() == 2) built += g * Rat(-2);
  }
  probes.push_back(built);
  std::vector<ParamPoly> deg2;
  for (const auto& p : probes)
    if (p.degree() == 2) deg2.push_back(p);
  GroebnerBasis gb = membership_basis(sys.generators, deg2);
  EXPECT_EQ(gb.truncated_at, 2);
  int members = 0;
  for (const auto& p : deg2) {
    bool m = member_deg2(sys.generators, vars, p);
    members += m;
    EXPECT_EQ(ideal_member(p, gb), m) << to_string(p);
  }
  EXPECT_GT(members, 0);
}

TEST(Groebner, CompareIdealsFindsDifference) {
  ParamPoly x = V(P::a), y = V(P::b);
  auto c = compare_ideals({x * x, x * y}, {x * x});
  EXPECT_FALSE(c.equal);
  EXPECT_EQ(c.only_in_a.size(), 1u);
  EXPECT_TRUE(c.only_in_b.empty());
  EXPECT_TRUE(compare_ideals({x + y, x - y}, {x, y}).equal);
}

TEST(Groebner, BudgetExceededThrows) {
  GroebnerOptions opt;
  opt.budget = std::chrono::milliseconds(0);
  auto F = paper_ledger("LOA-full", 4).generators;
  EXPECT_THROW(buchberger(F, opt), BudgetExceeded);
}

TEST(Hilbert, SmallExamples) {
  ParamPoly x = V(P::a), y = V(P::b), z = V(P::c);
  std::set<ParamSymbol> R3{P::a, P::b, P::c};
  auto h = hilbert_dimension(buchberger({x * y, x * z}), R3);
  EXPECT_EQ(h.affine_dim, 2);
  EXPECT_EQ(h.projective_dim, 1);
  EXPECT_EQ(h.degree, 1);
  auto h2 = hilbert_dimension(buchberger({x * x}), {P::a, P::b});
  EXPECT_EQ(h2.affine_dim, 1);
  EXPECT_EQ(h2.degree, 2);
  auto h3 = hilbert_dimension(buchberger({x * y - z * z}), R3);
  EXPECT_EQ(h3.affine_dim, 2);
  EXPECT_EQ(h3.degree, 2);
  auto h4 = hilbert_dimension(buchberger({x}), R3);
  EXPECT_EQ(h4.affine_dim, 2);
  EXPECT_EQ(h4.degree, 1);
}

TEST(Hilbert, RejectsBadInput) {
  ParamPoly x = V(P::a);
  EXPECT_THROW(hilbert_dimension(buchberger({x * x - x}), {P::a}), NotHomogeneousError);
  EXPECT_THROW(hilbert_dimension(buchberger({x * V(P::b)}), {P::a}), std::invalid_argument);
  GroebnerOptions opt;
  opt.max_degree = 1;
  EXPECT_THROW(hilbert_dimension(buchberger({x * x}, opt), {P::a}), std::invalid_argument);
}

TEST(Hilbert, NumeratorMatchesStandardMonomialCounts) {
  // H(t) = N(t) / (1-t)^r; compare series coefficients with brute-force counts
  auto check = [](const std::vector<ParamPoly>& F, const std::set<ParamSymbol>& ring) {
    GroebnerBasis gb = buchberger(F);
    auto h = hilbert_dimension(gb, ring);
    std::vector<Monomial> lts;
    for (const auto& g : gb.generators) lts.push_back(g.leading_monomial());
    std::vector<ParamSymbol> vars(ring.begin(), ring.end());
    const int r = static_cast<int>(vars.size());
    for (int d = 0; d <= 5; ++d) {
      mpz_class series = 0;
      for (int i = 0; i <= d && i < static_cast<int>(h.numerator.size()); ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d - i + r - 1), static_cast<unsigned long>(r - 1));
        series += h.numerator[i] * binom;
      }
      EXPECT_EQ(series, standard_monomial_count(lts, vars, d)) << "degree " << d;
    }
  };
  check(paper_ledger("Obstr2PhiC1C2C3L2", 4).generators, {P::alpha, P::beta, P::c, P::a, P::aperp, P::b, P::bperp});
  check(paper_ledger("StdRep", 4).generators, family_params("lin1"));
  std::mt19937 rng(2);
  std::vector<ParamSymbol> vars{P::a1, P::a2, P::a3, P::a4};
  for (int it = 0; it < 6; ++it) {
    std::vector<ParamPoly> F;
    for (int k = 0; k < 3; ++k) F.push_back(oracle::random_poly(rng, vars, 2, 2, true));
    check(F, {vars.begin(), vars.end()});
  }
}

TEST(Hilbert, ReflSecondObstructionDimensions) {
  for (int n : {4, 5}) {
    auto gb = buchberger(paper_ledger("Obstr2PhiC1C2C3L2", n).generators);
    auto h = hilbert_dimension(gb, family_params("refl-full"));
    EXPECT_EQ(h.affine_dim, 5) << n;
    EXPECT_EQ(h.projective_dim, 4) << n;
  }
}
