#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doa/parallel.hpp"
#include "doa/sympoly.hpp"

namespace doa {

using Pair = std::pair<BasisIndex, BasisIndex>;
using Triple = std::array<BasisIndex, 3>;

/// Value of a 2-cochain component on a basis pair.
struct Entry {
  Vect linear;
  ParamPoly constant;

  bool is_zero() const { return linear.is_zero() && constant.is_zero(); }
  Entry operator-() const { return {-linear, -constant}; }
  Entry& operator+=(const Entry& o) {
    linear += o.linear;
    constant += o.constant;
    return *this;
  }
  friend bool operator==(const Entry& a, const Entry& b) {
    return a.linear == b.linear && a.constant == b.constant;
  }
};

/// Group-graded alternating 2-cochain on V, stored on canonical pairs (u < v).
/// With bar = true the table is indexed by the spanning vectors x̄_i, ȳ_i of
/// h*⊕h and linear values are kept with zero block sums.
struct TwoCochain {
  using Component = std::map<Pair, Entry>;

  int n = 4;
  bool bar = false;
  std::map<Perm, Component> table;

  TwoCochain() = default;
  explicit TwoCochain(int n_, bool bar_ = false) : n(n_), bar(bar_) {}

  void add(const Perm& g, BasisIndex u, BasisIndex v, const Vect& lin, const ParamPoly& cst) {
    if (u == v) throw std::invalid_argument("alternating cochain: diagonal entry");
    Entry e{lin, cst};
    if (v < u) {
      std::swap(u, v);
      e = -e;
    }
    if (e.is_zero()) return;
    auto& comp = table[g];
    auto [it, fresh] = comp.try_emplace({u, v}, e);
    if (!fresh) {
      it->second += e;
      if (it->second.is_zero()) comp.erase(it);
    }
    if (comp.empty()) table.erase(g);
  }
  void add_linear(const Perm& g, BasisIndex u, BasisIndex v, const Vect& lin) { add(g, u, v, lin, {}); }
  void add_constant(const Perm& g, BasisIndex u, BasisIndex v, const ParamPoly& c) { add(g, u, v, {}, c); }

  Entry get(const Perm& g, BasisIndex u, BasisIndex v) const {
    if (u == v) return {};
    auto it = table.find(g);
    if (it == table.end()) return {};
    bool flip = v < u;
    if (flip) std::swap(u, v);
    auto jt = it->second.find({u, v});
    if (jt == it->second.end()) return {};
    return flip ? -jt->second : jt->second;
  }

  std::vector<Perm> support() const {
    std::vector<Perm> s;
    for (const auto& [g, _] : table) s.push_back(g);
    return s;
  }
  std::vector<Perm> linear_support() const {
    std::vector<Perm> s;
    for (const auto& [g, comp] : table)
      for (const auto& [_, e] : comp)
        if (!e.linear.is_zero()) {
          s.push_back(g);
          break;
        }
    return s;
  }
  std::vector<Perm> constant_support() const {
    std::vector<Perm> s;
    for (const auto& [g, comp] : table)
      for (const auto& [_, e] : comp)
        if (!e.constant.is_zero()) {
          s.push_back(g);
          break;
        }
    return s;
  }

  TwoCochain linear_part() const {
    TwoCochain r(n, bar);
    for (const auto& [g, comp] : table)
      for (const auto& [p, e] : comp) r.add(g, p.first, p.second, e.linear, {});
    return r;
  }
  TwoCochain constant_part() const {
    TwoCochain r(n, bar);
    for (const auto& [g, comp] : table)
      for (const auto& [p, e] : comp) r.add(g, p.first, p.second, {}, e.constant);
    return r;
  }

  TwoCochain& operator+=(const TwoCochain& o) {
    if (o.n != n || o.bar != bar) throw SizeError("adding cochains over different spaces");
    for (const auto& [g, comp] : o.table)
      for (const auto& [p, e] : comp) add(g, p.first, p.second, e.linear, e.constant);
    return *this;
  }
  friend TwoCochain operator+(TwoCochain a, const TwoCochain& b) { return a += b; }

  TwoCochain scaled(const ParamPoly& s) const {
    TwoCochain r(n, bar);
    for (const auto& [g, comp] : table)
      for (const auto& [p, e] : comp) r.add(g, p.first, p.second, s * e.linear, e.constant * s);
    return r;
  }

  TwoCochain substitute(const Bindings& subs) const {
    TwoCochain r(n, bar);
    for (const auto& [g, comp] : table)
      for (const auto& [p, e] : comp)
        r.add(g, p.first, p.second, e.linear.substitute(subs), e.constant.substitute(subs));
    return r;
  }

  std::set<ParamSymbol> symbols() const {
    std::set<ParamSymbol> out;
    for (const auto& [g, comp] : table)
      for (const auto& [p, e] : comp) {
        for (auto s : e.constant.symbols()) out.insert(s);
        for (const auto& [b, x] : e.linear.coords())
          for (auto s : x.symbols()) out.insert(s);
      }
    return out;
  }
  bool is_numeric() const { return symbols().empty(); }
  bool is_zero() const { return table.empty(); }

  friend bool operator==(const TwoCochain& a, const TwoCochain& b) {
    return a.n == b.n && a.bar == b.bar && a.table == b.table;
  }
};

/// Reads a bar-indexed table as a cochain on V: x_[n], y_[n] go to the kernel
/// because the table rows over each block sum to zero.
inline TwoCochain as_full_space(const TwoCochain& k) {
  TwoCochain r = k;
  r.bar = false;
  return r;
}

/// Dense lookup for one component; used by the ψ/φ inner loops.
class DenseComponent {
 public:
  DenseComponent(const TwoCochain::Component& comp, int n) : n2_(2 * n), p_(n2_ * n2_, nullptr), s_(n2_ * n2_, 0) {
    for (const auto& [pr, e] : comp) {
      int u = pr.first.pos(n), v = pr.second.pos(n);
      p_[u * n2_ + v] = &e;
      s_[u * n2_ + v] = 1;
      p_[v * n2_ + u] = &e;
      s_[v * n2_ + u] = -1;
    }
  }
  const Entry* get(int u, int v, int& sign) const {
    sign = s_[u * n2_ + v];
    return p_[u * n2_ + v];
  }

 private:
  int n2_;
  std::vector<const Entry*> p_;
  std::vector<signed char> s_;
};

/// κ_g(u, v) for a single component, bilinear in u and v.
inline Entry eval_component(const TwoCochain::Component& comp, int n, const Vect& u, const Vect& v) {
  Entry out;
  for (const auto& [bu, cu] : u.coords())
    for (const auto& [bv, cv] : v.coords()) {
      if (bu == bv) continue;
      Pair key = bu < bv ? Pair{bu, bv} : Pair{bv, bu};
      auto it = comp.find(key);
      if (it == comp.end()) continue;
      ParamPoly s = cu * cv;
      if (bv < bu) s = -s;
      out.linear.add_scaled(it->second.linear, s);
      out.constant += it->second.constant * s;
    }
  (void)n;
  return out;
}

inline Vect std_part(const Vect& v, int n) { return to_bar_coords(v, n).first; }

/// Bilinear alternating extension of the basis table.
inline GAElt eval2(const TwoCochain& k, const Vect& u0, const Vect& v0) {
  Vect u = k.bar ? std_part(u0, k.n) : u0;
  Vect v = k.bar ? std_part(v0, k.n) : v0;
  GAElt out;
  for (const auto& [g, comp] : k.table) {
    Entry e = eval_component(comp, k.n, u, v);
    out.add(g, SymPoly2::linear(e.linear) + SymPoly2::constant(e.constant));
  }
  return out;
}

struct Witness {
  std::string check;
  Perm g;
  std::vector<BasisIndex> tuple;
  std::string value;
};

struct CochainReport {
  bool invariant = true;
  std::multiset<int> support_codims;
  bool image_ok = true;
  bool kernel_ok = true;
  bool codim_ok = true;
  std::vector<Witness> witnesses;
};

struct InvarianceResidual {
  Perm g;  // component on the left-hand side
  Perm h;
  Pair pair;
  Entry diff;  // h·κ_g(u,v) − κ_{hgh⁻¹}(h·u, h·v)
};

/// Residuals of h·κ_g(u,v) = κ_{hgh⁻¹}(h·u, h·v) for h in `hs`, over every
/// basis pair and every g in the support or its preimage under conjugation.
inline std::vector<InvarianceResidual> invariance_residuals(const TwoCochain& k, const std::vector<Perm>& hs) {
  std::vector<InvarianceResidual> out;
  auto B = basis(k.n);
  for (const auto& h : hs) {
    std::set<Perm> gs;
    Perm hinv = inverse(h);
    for (const auto& [g, _] : k.table) {
      gs.insert(g);
      gs.insert(conjugate(hinv, g));
    }
    for (const auto& g : gs) {
      Perm g2 = conjugate(h, g);
      for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j) {
          Entry lhs = k.get(g, B[i], B[j]);
          Entry moved{act(h, lhs.linear), lhs.constant};
          Entry rhs = k.get(g2, act(h, B[i]), act(h, B[j]));
          Entry d = moved;
          d += -rhs;
          if (!d.is_zero()) out.push_back({g, h, {B[i], B[j]}, d});
        }
    }
  }
  return out;
}

inline std::string to_string(const Entry& e) {
  std::string s = to_string(e.linear);
  if (!e.constant.is_zero()) s += " | const " + to_string(e.constant);
  return s;
}

/// Generator-closure check by default; exhaustive over S_n on request.
inline CochainReport check_invariance(const TwoCochain& k, bool exhaustive = false) {
  CochainReport r;
  auto hs = exhaustive ? all_perms(k.n) : generators(k.n);
  for (const auto& res : invariance_residuals(k, hs)) {
    r.invariant = false;
    r.witnesses.push_back({"invariance", res.g, {res.pair.first, res.pair.second},
                           "h=" + to_string(res.h) + ": " + to_string(res.diff)});
  }
  return r;
}

/// Linear support must sit on elements with codim V^g in {0, 2}.
inline CochainReport check_support_codim(const TwoCochain& k) {
  CochainReport r;
  auto lin = k.linear_support();
  std::set<Perm> linset(lin.begin(), lin.end());
  for (const auto& [g, _] : k.table) {
    int cd = fixed_codim(g);
    r.support_codims.insert(cd);
    if (linset.count(g) && cd != 0 && cd != 2) {
      r.codim_ok = false;
      r.witnesses.push_back({"support-codim", g, {}, "codim " + std::to_string(cd)});
    }
  }
  return r;
}

/// Residual polynomials for im κ^L_g ⊆ V^g, keyed by (g, pair).
struct ImageResidual {
  Perm g;
  Pair pair;
  std::vector<ParamPoly> diffs;
};

inline std::vector<ImageResidual> image_residuals(const TwoCochain& k) {
  std::vector<ImageResidual> out;
  for (const auto& [g, comp] : k.table) {
    if (g.is_identity()) continue;
    for (const auto& [p, e] : comp) {
      if (e.linear.is_zero()) continue;
      auto d = fixed_space_residual(g, e.linear);
      if (!d.empty()) out.push_back({g, p, std::move(d)});
    }
  }
  return out;
}

inline CochainReport check_image(const TwoCochain& k) {
  CochainReport r;
  for (const auto& res : image_residuals(k)) {
    r.image_ok = false;
    Entry e = k.get(res.g, res.pair.first, res.pair.second);
    r.witnesses.push_back({"image", res.g, {res.pair.first, res.pair.second}, to_string(e.linear)});
  }
  return r;
}

/// V^g ⊆ ker κ_g for every g ≠ 1 in the support.
inline CochainReport check_kernel(const TwoCochain& k) {
  CochainReport r;
  auto B = basis(k.n);
  for (const auto& [g, comp] : k.table) {
    if (g.is_identity()) continue;
    for (const auto& f : fixed_space(g).basis) {
      Vect ff = k.bar ? std_part(f, k.n) : f;
      for (const auto& b : B) {
        Vect bb = k.bar ? std_part(Vect(b), k.n) : Vect(b);
        Entry e = eval_component(comp, k.n, ff, bb);
        if (!e.is_zero()) {
          r.kernel_ok = false;
          r.witnesses.push_back({"kernel", g, {b}, to_string(e)});
        }
      }
    }
  }
  return r;
}

/// Group-graded alternating 3-cochain with values in S(V) of degree <= 2.
struct ThreeCochain {
  using Component = std::map<Triple, SymPoly2>;

  int n = 4;
  std::map<Perm, Component> table;
  /// For φ: the (x, y) summands with xy = g.
  std::map<std::pair<Perm, Perm>, Component> breakdown;
  std::vector<std::string> warnings;

  ThreeCochain() = default;
  explicit ThreeCochain(int n_) : n(n_) {}

  static int sort_triple(Triple& t) {
    int sign = 1;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j + 1 < 3 - i; ++j)
        if (t[j + 1] < t[j]) {
          std::swap(t[j], t[j + 1]);
          sign = -sign;
        }
    return sign;
  }

  void add(const Perm& g, Triple t, const SymPoly2& v) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw std::invalid_argument("alternating 3-cochain: repeated slot");
    int s = sort_triple(t);
    if (v.is_zero()) return;
    auto& comp = table[g];
    auto [it, fresh] = comp.try_emplace(t, s > 0 ? v : -v);
    if (!fresh) {
      it->second += s > 0 ? v : -v;
      if (it->second.is_zero()) comp.erase(it);
    }
    if (comp.empty()) table.erase(g);
  }

  SymPoly2 get(const Perm& g, Triple t) const {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return {};
    int s = sort_triple(t);
    auto it = table.find(g);
    if (it == table.end()) return {};
    auto jt = it->second.find(t);
    if (jt == it->second.end()) return {};
    return s > 0 ? jt->second : -jt->second;
  }

  bool is_zero() const { return table.empty(); }

  ThreeCochain& operator+=(const ThreeCochain& o) {
    for (const auto& [g, comp] : o.table)
      for (const auto& [t, v] : comp) add(g, t, v);
    return *this;
  }
  ThreeCochain scaled(const ParamPoly& s) const {
    ThreeCochain r(n);
    for (const auto& [g, comp] : table)
      for (const auto& [t, v] : comp) r.add(g, t, s * v);
    return r;
  }
  friend ThreeCochain operator-(const ThreeCochain& a, const ThreeCochain& b) {
    ThreeCochain r(a.n);
    r += a;
    r += b.scaled(ParamPoly(-1));
    return r;
  }
  friend bool operator==(const ThreeCochain& a, const ThreeCochain& b) { return a.table == b.table; }

  std::size_t entry_count() const {
    std::size_t c = 0;
    for (const auto& [_, comp] : table) c += comp.size();
    return c;
  }
};

inline std::vector<Triple> canonical_triples(int n) {
  auto B = basis(n);
  std::vector<Triple> out;
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      for (std::size_t k = j + 1; k < B.size(); ++k) out.push_back({B[i], B[j], B[k]});
  return out;
}

namespace detail {

/// Dense accumulator for one degree <= 2 value over positions 0..2n-1.
struct Acc {
  int n2;
  ParamPoly c0;
  std::vector<ParamPoly> c1;
  std::map<std::pair<int, int>, ParamPoly> c2;
  explicit Acc(int n2_) : n2(n2_), c1(n2_) {}
  SymPoly2 finish(int n) const {
    SymPoly2 s;
    s.add(SymMono::one(), c0);
    for (int p = 0; p < n2; ++p) s.add(SymMono::lin(BasisIndex::from_pos(p, n)), c1[p]);
    for (const auto& [pq, v] : c2) s.add(SymMono::quad(BasisIndex::from_pos(pq.first, n), BasisIndex::from_pos(pq.second, n)), v);
    return s;
  }
  void add2(int p, int q, const ParamPoly& v) {
    if (v.is_zero()) return;
    if (q < p) std::swap(p, q);
    auto [it, fresh] = c2.try_emplace({p, q}, v);
    if (!fresh) it->second += v;
  }
};

}  // namespace detail

/// ψ(α)_g(v1,v2,v3) = α_g(v1,v2)(g·v3 − v3) + α_g(v2,v3)(g·v1 − v1) + α_g(v3,v1)(g·v2 − v2).
inline ThreeCochain psi(const TwoCochain& alpha_in, int jobs = default_jobs()) {
  TwoCochain alpha = alpha_in.bar ? as_full_space(alpha_in) : alpha_in;
  const int n = alpha.n, n2 = 2 * n;
  ThreeCochain out(n);
  auto triples = canonical_triples(n);
  std::vector<Perm> gs;
  for (const auto& [g, _] : alpha.table)
    if (!g.is_identity()) gs.push_back(g);
  std::vector<ThreeCochain::Component> slots(gs.size());
  parallel_for(gs.size(), jobs, [&](std::size_t gi) {
    const Perm& g = gs[gi];
    DenseComponent D(alpha.table.at(g), n);
    std::vector<int> img(n2);
    for (int p = 0; p < n2; ++p) img[p] = act(g, BasisIndex::from_pos(p, n)).pos(n);
    for (const auto& t : triples) {
      int pos[3] = {t[0].pos(n), t[1].pos(n), t[2].pos(n)};
      if (img[pos[0]] == pos[0] && img[pos[1]] == pos[1] && img[pos[2]] == pos[2]) continue;
      detail::Acc acc(n2);
      bool any = false;
      for (int r = 0; r < 3; ++r) {
        int u = pos[r], v = pos[(r + 1) % 3], w = pos[(r + 2) % 3];
        if (img[w] == w) continue;
        int sg;
        const Entry* e = D.get(u, v, sg);
        if (!e) continue;
        any = true;
        Rat s(sg);
        // α(u,v) times (e_{g w} − e_w)
        if (!e->constant.is_zero()) {
          acc.c1[img[w]] += e->constant * s;
          acc.c1[w] -= e->constant * s;
        }
        for (const auto& [b, x] : e->linear.coords()) {
          int bp = b.pos(n);
          acc.add2(bp, img[w], x * s);
          acc.add2(bp, w, x * (-s));
        }
      }
      if (!any) continue;
      SymPoly2 val = acc.finish(n);
      if (!val.is_zero()) slots[gi].emplace(t, std::move(val));
    }
  });
  for (std::size_t gi = 0; gi < gs.size(); ++gi)
    if (!slots[gi].empty()) out.table.emplace(gs[gi], std::move(slots[gi]));
  return out;
}

/// φ(α,β)_g = Σ_{xy=g} φ_{x,y}, with
/// φ_{x,y}(v1,v2,v3) = α_x(v1 + y·v1, β_y(v2,v3)) + cyclic.
/// Only the linear part of β is used.
inline ThreeCochain phi(const TwoCochain& alpha_in, const TwoCochain& beta_in, bool keep_breakdown = true,
                        int jobs = default_jobs()) {
  TwoCochain alpha = alpha_in.bar ? as_full_space(alpha_in) : alpha_in;
  TwoCochain beta_full = beta_in.bar ? as_full_space(beta_in) : beta_in;
  if (alpha.n != beta_full.n) throw SizeError("phi: mismatched n");
  const int n = alpha.n, n2 = 2 * n;
  ThreeCochain out(n);
  TwoCochain beta = beta_full.linear_part();
  if (!beta_full.constant_support().empty())
    out.warnings.push_back("phi: constant part of the second argument ignored");

  std::vector<std::pair<Perm, Perm>> pairs;
  for (const auto& [x, _] : alpha.table)
    for (const auto& [y, __] : beta.table) pairs.emplace_back(x, y);
  auto triples = canonical_triples(n);

  std::vector<ThreeCochain::Component> slots(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t pi) {
    const auto& [x, y] = pairs[pi];
    DenseComponent A(alpha.table.at(x), n), Bc(beta.table.at(y), n);
    std::vector<int> yimg(n2);
    for (int p = 0; p < n2; ++p) yimg[p] = act(y, BasisIndex::from_pos(p, n)).pos(n);
    for (const auto& t : triples) {
      int pos[3] = {t[0].pos(n), t[1].pos(n), t[2].pos(n)};
      detail::Acc acc(n2);
      bool any = false;
      for (int r = 0; r < 3; ++r) {
        int u = pos[r], v = pos[(r + 1) % 3], w = pos[(r + 2) % 3];
        int sb;
        const Entry* be = Bc.get(v, w, sb);
        if (!be || be->linear.is_zero()) continue;
        int us[2] = {u, yimg[u]};
        int ucount = u == yimg[u] ? 1 : 2;
        Rat umult = u == yimg[u] ? Rat(2) : Rat(1);
        for (const auto& [b, coef] : be->linear.coords()) {
          int bp = b.pos(n);
          for (int k = 0; k < ucount; ++k) {
            int sa;
            const Entry* ae = A.get(us[k], bp, sa);
            if (!ae) continue;
            any = true;
            ParamPoly s = coef * Rat(umult * sa * sb);
            if (!ae->constant.is_zero()) acc.c0 += ae->constant * s;
            for (const auto& [lb, lx] : ae->linear.coords()) acc.c1[lb.pos(n)] += lx * s;
          }
        }
      }
      if (!any) continue;
      SymPoly2 val = acc.finish(n);
      if (!val.is_zero()) slots[pi].emplace(t, std::move(val));
    }
  });
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    if (slots[pi].empty()) continue;
    Perm g = compose(pairs[pi].first, pairs[pi].second);
    for (const auto& [t, v] : slots[pi]) out.add(g, t, v);
    if (keep_breakdown) out.breakdown.emplace(pairs[pi], std::move(slots[pi]));
  }
  return out;
}

/// h·θ − θ, where (h·θ)_{hgh⁻¹}(h·v1, h·v2, h·v3) = h·(θ_g(v1,v2,v3)).
inline ThreeCochain equivariance_residual(const ThreeCochain& theta, const Perm& h) {
  ThreeCochain moved(theta.n);
  for (const auto& [g, comp] : theta.table) {
    Perm g2 = conjugate(h, g);
    for (const auto& [t, v] : comp) moved.add(g2, {act(h, t[0]), act(h, t[1]), act(h, t[2])}, act(h, v));
  }
  return moved - theta;
}

}  // namespace doa
