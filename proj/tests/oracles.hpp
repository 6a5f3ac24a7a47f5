#pragma once

// Independent reference computations used only by the tests. They follow the
// definitions literally and are slow; keep n small.

#include <random>

#include "doa/doa.hpp"

namespace doa {

// readable gtest failure output
inline void PrintTo(const TwoCochain& k, std::ostream* os) { *os << to_json(k).dump(); }
inline void PrintTo(const ParamPoly& p, std::ostream* os) { *os << to_string(p); }

}  // namespace doa

namespace oracle {

using namespace doa;

/// Rank of a rational matrix by plain Gaussian elimination.
inline int rank(std::vector<std::vector<Rat>> m) {
  int r = 0;
  const int rows = static_cast<int>(m.size()), cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// dim (Λ²V*)^{S_n} as the rank of the Reynolds operator on Λ²V.
inline int reynolds_invariant_dim(int n) {
  auto B = basis(n);
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> idx;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j) {
      idx[{i, j}] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  const int D = static_cast<int>(pairs.size());
  std::vector<std::vector<Rat>> R(D, std::vector<Rat>(D));
  auto perms = all_perms(n);
  for (const auto& g : perms)
    for (int c = 0; c < D; ++c) {
      int u = act(g, B[pairs[c].first]).pos(n), v = act(g, B[pairs[c].second]).pos(n);
      int s = 1;
      if (v < u) {
        std::swap(u, v);
        s = -1;
      }
      R[idx[{u, v}]][c] += frac(s, static_cast<long>(perms.size()));
    }
  return rank(R);
}

inline SymPoly2 lin(const Vect& v) { return SymPoly2::linear(v); }

/// ψ(α)_g(v1,v2,v3) straight from the definition, through eval2 and sym_mul.
inline SymPoly2 psi_direct(const TwoCochain& alpha, const Perm& g, const Triple& t) {
  SymPoly2 out;
  for (int r = 0; r < 3; ++r) {
    Vect u(t[r]), v(t[(r + 1) % 3]), w(t[(r + 2) % 3]);
    SymPoly2 a = eval2(alpha, u, v).at(g);
    out += sym_mul(a, lin(act(g, w) - w));
  }
  return out;
}

/// φ(α,β)_g(v1,v2,v3) = Σ_{xy=g} α_x(v1 + y·v1, β_y(v2,v3)) + cyclic, using only
/// the linear part of β.
inline SymPoly2 phi_direct(const TwoCochain& alpha, const TwoCochain& beta, const Perm& g, const Triple& t) {
  SymPoly2 out;
  TwoCochain bl = beta.linear_part();
  for (const auto& [y, _] : bl.table) {
    Perm x = compose(g, inverse(y));
    if (!alpha.table.count(x)) continue;
    for (int r = 0; r < 3; ++r) {
      Vect u(t[r]), v(t[(r + 1) % 3]), w(t[(r + 2) % 3]);
      Vect bv = eval2(bl, v, w).at(y).linear_part();
      GAElt e = eval2(alpha, u + act(y, u), bv);
      out += e.at(x);
    }
  }
  return out;
}

inline std::vector<ParamSymbol> all_symbols() {
  std::vector<ParamSymbol> s;
  for (int i = 0; i < kNumSymbols; ++i) s.push_back(static_cast<ParamSymbol>(i));
  return s;
}

/// Random polynomial with small integer coefficients over `vars`.
inline ParamPoly random_poly(std::mt19937& rng, const std::vector<ParamSymbol>& vars, int terms, int maxdeg,
                             bool homogeneous = false) {
  std::uniform_int_distribution<int> coef(-3, 3), pick(0, static_cast<int>(vars.size()) - 1), dd(0, maxdeg);
  ParamPoly p;
  for (int t = 0; t < terms; ++t) {
    int d = homogeneous ? maxdeg : dd(rng);
    ParamPoly m(1);
    for (int k = 0; k < d; ++k) m *= sym(vars[pick(rng)]);
    int c = coef(rng);
    p += m * Rat(c == 0 ? 1 : c);
  }
  return p;
}

inline NumericPoint random_point(std::mt19937& rng, const std::set<ParamSymbol>& vars, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  NumericPoint p;
  for (auto s : vars) p[s] = Rat(d(rng));
  return p;
}

}  // namespace oracle
