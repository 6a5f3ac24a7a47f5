#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doa/cochain.hpp"

namespace doa {

struct UnknownFamilyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FamilySpec {
  std::string name;
  int n = 4;
  Bindings bindings;
};

namespace detail {

inline ParamPoly S(ParamSymbol s) { return ParamPoly(s); }

/// Assigns κ_g(u, v) := value and rejects contradictory reassignment, so the
/// overlapping rules of a definition are checked against each other.
class TableWriter {
 public:
  explicit TableWriter(int n, bool bar = false) : k_(n, bar) {}
  void set(const Perm& g, BasisIndex u, BasisIndex v, const Vect& lin, const ParamPoly& cst) {
    Entry e{lin, cst};
    if (v < u) {
      std::swap(u, v);
      e = -e;
    }
    auto key = std::make_pair(g, Pair{u, v});
    auto it = seen_.find(key);
    if (it != seen_.end()) {
      if (!(it->second == e))
        throw std::logic_error("inconsistent cochain definition at " + to_string(g) + " (" + to_string(u) + "," +
                               to_string(v) + ")");
      return;
    }
    seen_.emplace(key, e);
    k_.add(g, u, v, e.linear, e.constant);
  }
  TwoCochain take() { return std::move(k_); }

 private:
  TwoCochain k_;
  std::map<std::pair<Perm, Pair>, Entry> seen_;
};

}  // namespace detail

/// κ₁^L on the identity.
inline TwoCochain kappa1_linear(int n) {
  require_n(n);
  using detail::S;
  using P = ParamSymbol;
  TwoCochain k(n);
  Perm id(n);
  Vect xs = full_sum(Kind::X, n), ys = full_sum(Kind::Y, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vect dx = Vect(X(i)) - Vect(X(j)), dy = Vect(Y(i)) - Vect(Y(j));
      k.add_linear(id, X(i), X(j), S(P::a1) * dx + S(P::b1) * dy);
      k.add_linear(id, Y(i), Y(j), S(P::a2) * dx + S(P::b2) * dy);
    }
  for (int i = 1; i <= n; ++i) {
    k.add_linear(id, X(i), Y(i), S(P::a3) * Vect(X(i)) + S(P::a4) * xs + S(P::b3) * Vect(Y(i)) + S(P::b4) * ys);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      k.add_linear(id, X(i), Y(j),
                   S(P::a5) * Vect(X(i)) + S(P::a6) * Vect(X(j)) + S(P::a7) * xs + S(P::b5) * Vect(Y(i)) +
                       S(P::b6) * Vect(Y(j)) + S(P::b7) * ys);
    }
  }
  return k;
}

/// κ₁^C on the identity: α on (x_i, y_i), β on (x_i, y_j), zero within a block.
inline TwoCochain kappa1_constant(int n) {
  require_n(n);
  TwoCochain k(n);
  Perm id(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) k.add_constant(id, X(i), Y(j), i == j ? sym(ParamSymbol::alpha) : sym(ParamSymbol::beta));
  return k;
}

/// Value a·x_{ij} + a⊥·x_{ij}^⊥ + b·y_{ij} + b⊥·y_{ij}^⊥ carried by κ^L_{(ij)}.
inline Vect refl_value(int n, int i, int j) {
  using detail::S;
  using P = ParamSymbol;
  return S(P::a) * block_sum(Kind::X, {i, j}) + S(P::aperp) * complement_sum(Kind::X, {i, j}, n) +
         S(P::b) * block_sum(Kind::Y, {i, j}) + S(P::bperp) * complement_sum(Kind::Y, {i, j}, n);
}

namespace detail {

/// Writes the transposition pattern: (x_i,y_i), (x_j,y_j) get `val`,
/// (x_i,y_j), (x_j,y_i) get its negative; everything else on V^g vanishes.
inline void refl_pattern(TableWriter& w, const Perm& g, int i, int j, const Vect& lin, const ParamPoly& cst) {
  w.set(g, X(i), Y(i), lin, cst);
  w.set(g, X(j), Y(j), lin, cst);
  w.set(g, X(i), Y(j), -lin, -cst);
  w.set(g, X(j), Y(i), -lin, -cst);
}

}  // namespace detail

inline TwoCochain kappa_refl_linear(int n) {
  require_n(n);
  detail::TableWriter w(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) detail::refl_pattern(w, Perm::transposition(n, i, j), i, j, refl_value(n, i, j), {});
  return w.take();
}

inline TwoCochain kappa_refl_constant(int n) {
  require_n(n);
  detail::TableWriter w(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      detail::refl_pattern(w, Perm::transposition(n, i, j), i, j, {}, sym(ParamSymbol::c));
  return w.take();
}

enum class TriMode { Formula, Matrix };

/// κ^C_tri on 3-cycles.
inline TwoCochain kappa_tri(int n, TriMode mode = TriMode::Formula) {
  require_n(n);
  using detail::S;
  using P = ParamSymbol;
  ParamPoly da = S(P::aperp) - S(P::a), db = S(P::bperp) - S(P::b);
  ParamPoly yy = da * da, xx = db * db, xy = da * db;
  if (mode == TriMode::Formula) {
    detail::TableWriter w(n);
    for (const auto& g : three_cycles(n)) {
      for (int k = 1; k <= n; ++k) {
        if (g(k) == k) continue;
        for (BasisIndex v : {X(k), Y(k)}) {
          w.set(g, v, v.dual(), {}, {});
          w.set(g, v, act(g, v), {}, v.kind == Kind::Y ? yy : xx);
          w.set(g, act(g, v), v.dual(), {}, xy);
          w.set(g, v, act(g, v.dual()), {}, -xy);
        }
      }
    }
    return w.take();
  }
  // M ⊗ ([g] − [g]^T), [g]_{pq} = 1 iff g(q) = p
  ParamPoly M[2][2] = {{-xx, xy}, {xy, -yy}};
  TwoCochain k(n);
  for (const auto& g : three_cycles(n)) {
    std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
    for (int q = 1; q <= n; ++q) {
      A[g(q) - 1][q - 1] += 1;
      A[q - 1][g(q) - 1] -= 1;
    }
    int n2 = 2 * n;
    for (int r = 0; r < n2; ++r)
      for (int s = r + 1; s < n2; ++s) {
        int A_rs = A[r % n][s % n];
        if (!A_rs) continue;
        k.add_constant(g, BasisIndex::from_pos(r, n), BasisIndex::from_pos(s, n), M[r / n][s / n] * Rat(A_rs));
      }
  }
  return k;
}

inline Bindings combined_bindings(int n) {
  using P = ParamSymbol;
  Bindings b;
  for (int i : {1, 2, 3, 5, 6}) {
    b[a_sym(i)] = ParamPoly();
    b[b_sym(i)] = ParamPoly();
  }
  b[P::a7] = sym(P::a4);
  b[P::b7] = sym(P::b4);
  b[P::beta] = sym(P::alpha);
  b[P::a] = sym(P::aperp) * frac(-(n - 2), 2);
  b[P::b] = sym(P::bperp) * frac(-(n - 2), 2);
  return b;
}

/// Sum of the 3-cycles (ijk) − (kji) over k ∉ {i, j}, as (g, sign) pairs.
inline std::vector<std::pair<Perm, int>> three_cycle_sum(int n, int i, int j) {
  std::vector<std::pair<Perm, int>> out;
  for (int k = 1; k <= n; ++k) {
    if (k == i || k == j) continue;
    out.emplace_back(Perm::cycle(n, {i, j, k}), 1);
    out.emplace_back(Perm::cycle(n, {k, j, i}), -1);
  }
  return out;
}

/// Bar-basis family on h*⊕h with parameters a⊥, b⊥, c.
inline TwoCochain std_refl(int n) {
  require_n(n);
  using P = ParamSymbol;
  ParamPoly ap = sym(P::aperp), bp = sym(P::bperp), c = sym(P::c);
  Rat half_n = frac(n, 2), quarter_n2 = frac(n * n, 4);
  TwoCochain k(n, true);
  auto xbar_sum = [&](int i, int j) { return bar(X(i), n) + bar(X(j), n); };
  auto ybar_sum = [&](int i, int j) { return bar(Y(i), n) + bar(Y(j), n); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Perm t = Perm::transposition(n, i, j);
      Vect v = ap * xbar_sum(i, j) + bp * ybar_sum(i, j);
      // κ^L(x̄_i, ȳ_j) and its constant −c(ij)
      k.add(t, X(i), Y(j), half_n * v, -c);
      for (const auto& [g, s] : three_cycle_sum(n, i, j)) k.add_constant(g, X(i), Y(j), -(quarter_n2 * s) * ap * bp);
      // κ(x̄_i, ȳ_i) collects −(n/2)(...)⊗(ij) + c(ij) over j ≠ i
      k.add(t, X(i), Y(i), -(half_n * v), c);
      if (i < j) {
        for (const auto& [g, s] : three_cycle_sum(n, i, j)) {
          k.add_constant(g, X(i), X(j), (quarter_n2 * s) * bp * bp);
          k.add_constant(g, Y(i), Y(j), (quarter_n2 * s) * ap * ap);
        }
      }
    }
  return k;
}

/// Residuals of the relation Σ x̄_i = Σ ȳ_i = 0 on a bar table: Σ_i κ_g(v_i, b) over each block.
inline std::vector<std::pair<Perm, Entry>> bar_consistency_residual(const TwoCochain& k) {
  std::vector<std::pair<Perm, Entry>> out;
  for (const auto& [g, comp] : k.table)
    for (Kind kind : {Kind::X, Kind::Y})
      for (const auto& b : basis(k.n)) {
        Entry sum;
        for (int i = 1; i <= k.n; ++i) sum += k.get(g, {kind, static_cast<std::uint8_t>(i)}, b);
        if (!sum.is_zero()) out.emplace_back(g, sum);
      }
  return out;
}

/// Re-expresses κ on the bar vectors, dropping the x_[n], y_[n] directions of values.
inline TwoCochain restrict_to_std(const TwoCochain& k) {
  if (k.bar) return k;
  TwoCochain r(k.n, true);
  auto B = basis(k.n);
  std::vector<Vect> bars;
  for (const auto& b : B) bars.push_back(bar(b, k.n));
  for (const auto& [g, comp] : k.table)
    for (std::size_t i = 0; i < B.size(); ++i)
      for (std::size_t j = i + 1; j < B.size(); ++j) {
        Entry e = eval_component(comp, k.n, bars[i], bars[j]);
        r.add(g, B[i], B[j], std_part(e.linear, k.n), e.constant);
      }
  return r;
}

/// Extension with x_[n], y_[n] in the kernel.
inline TwoCochain extend_from_std(const TwoCochain& k) {
  if (!k.bar) throw std::invalid_argument("extend_from_std: cochain is not bar-indexed");
  return as_full_space(k);
}

inline TwoCochain specialize(const TwoCochain& k, const NumericPoint& point) {
  Bindings b;
  for (const auto& [s, v] : point) b.emplace(s, ParamPoly(v));
  return k.substitute(b);
}

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "lie1", "const1", "lin1", "refl", "refl-linear", "tri", "refl-tri", "refl-full", "lie",
      "combined", "combined-free", "std-refl", "std-lie", "rca-perm", "rca-std"};
  return names;
}

inline std::set<ParamSymbol> family_params(const std::string& name) {
  using P = ParamSymbol;
  std::set<ParamSymbol> ab;
  for (int i = 1; i <= 7; ++i) {
    ab.insert(a_sym(i));
    ab.insert(b_sym(i));
  }
  std::set<ParamSymbol> refl = {P::a, P::aperp, P::b, P::bperp};
  auto join = [](std::set<ParamSymbol> x, std::initializer_list<std::set<ParamSymbol>> ys) {
    for (const auto& y : ys) x.insert(y.begin(), y.end());
    return x;
  };
  if (name == "lin1") return ab;
  if (name == "lie1") return join(ab, {{P::alpha, P::beta}});
  if (name == "const1") return {P::alpha, P::beta};
  if (name == "refl") return join(refl, {{P::c}});
  if (name == "refl-linear" || name == "tri") return refl;
  if (name == "refl-tri") return join(refl, {{P::c}});
  if (name == "refl-full") return join(refl, {{P::c, P::alpha, P::beta}});
  if (name == "lie" || name == "std-lie") return join(ab, {{P::alpha, P::beta, P::c}});
  if (name == "combined") return {P::a4, P::b4, P::alpha, P::c, P::aperp, P::bperp};
  if (name == "combined-free") return join(ab, {refl, {P::alpha, P::beta, P::c}});
  if (name == "std-refl") return {P::aperp, P::bperp, P::c};
  if (name == "rca-perm") return {P::alpha, P::beta, P::c};
  if (name == "rca-std") return {P::beta, P::c};
  throw UnknownFamilyError("unknown family '" + name + "'");
}

inline TwoCochain build_kappa1(const FamilySpec& spec) {
  return (kappa1_linear(spec.n) + kappa1_constant(spec.n)).substitute(spec.bindings);
}
inline TwoCochain build_kappa_refl(const FamilySpec& spec) {
  return (kappa_refl_linear(spec.n) + kappa_refl_constant(spec.n)).substitute(spec.bindings);
}
inline TwoCochain build_kappa_tri(const FamilySpec& spec, TriMode mode = TriMode::Formula) {
  return kappa_tri(spec.n, mode).substitute(spec.bindings);
}

/// Unbound family cochain (before user bindings).
inline TwoCochain family_cochain(const std::string& name, int n) {
  require_n(n);
  if (name == "lin1") return kappa1_linear(n);
  if (name == "lie1") return kappa1_linear(n) + kappa1_constant(n);
  if (name == "const1") return kappa1_constant(n);
  if (name == "refl") return kappa_refl_linear(n) + kappa_refl_constant(n);
  if (name == "refl-linear") return kappa_refl_linear(n);
  if (name == "tri") return kappa_tri(n);
  if (name == "refl-tri") return kappa_refl_linear(n) + kappa_refl_constant(n) + kappa_tri(n);
  if (name == "refl-full") return kappa_refl_linear(n) + kappa_refl_constant(n) + kappa_tri(n) + kappa1_constant(n);
  if (name == "lie" || name == "std-lie") return kappa1_linear(n) + kappa1_constant(n) + kappa_refl_constant(n);
  if (name == "combined-free" || name == "combined") {
    TwoCochain k = kappa1_linear(n) + kappa1_constant(n) + kappa_refl_linear(n) + kappa_refl_constant(n) + kappa_tri(n);
    return name == "combined" ? k.substitute(combined_bindings(n)) : k;
  }
  if (name == "std-refl") return std_refl(n);
  if (name == "rca-perm") return kappa1_constant(n) + kappa_refl_constant(n);
  if (name == "rca-std") {
    using P = ParamSymbol;
    Bindings rel{{P::alpha, sym(P::beta) * Rat(-(n - 1))}};
    return restrict_to_std((kappa1_constant(n) + kappa_refl_constant(n)).substitute(rel));
  }
  throw UnknownFamilyError("unknown family '" + name + "'");
}

inline void validate(const FamilySpec& spec) {
  require_n(spec.n);
  auto params = family_params(spec.name);
  for (const auto& [s, _] : spec.bindings)
    if (!params.count(s))
      throw std::invalid_argument("family '" + spec.name + "' has no parameter " + std::string(name(s)));
}

/// A named family with its bindings applied.
inline TwoCochain build_presentation(const FamilySpec& spec) {
  validate(spec);
  return family_cochain(spec.name, spec.n).substitute(spec.bindings);
}

}  // namespace doa
