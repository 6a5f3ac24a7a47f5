#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "doa/param_poly.hpp"

namespace doa {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotHomogeneousError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GroebnerOptions {
  /// Wall-clock budget; none means unbounded.
  std::optional<std::chrono::milliseconds> budget;
  /// For homogeneous input: drop S-pairs whose lcm degree exceeds this.
  /// The result is then a basis only up to that degree.
  int max_degree = -1;
};

struct GroebnerBasis {
  std::vector<ParamPoly> generators;  // monic, inter-reduced, grevlex-sorted
  std::size_t spairs = 0;             // S-polynomials actually reduced
  std::size_t zero_reductions = 0;
  std::size_t skipped_pairs = 0;      // removed by the two criteria
  int truncated_at = -1;              // -1 for a full basis
  long long elapsed_ms = 0;

  bool contains_one() const { return generators.size() == 1 && generators[0].is_constant(); }
};

namespace detail {

/// Reduces p by `G` (leading terms only, or all terms when full = true).
inline ParamPoly reduce(ParamPoly p, const std::vector<ParamPoly>& G, bool full) {
  std::size_t i = 0;
  while (i < p.size()) {
    const auto& t = p.terms()[i];
    const ParamPoly* div = nullptr;
    for (const auto& g : G)
      if (g.leading_monomial().divides(t.m)) {
        div = &g;
        break;
      }
    if (!div) {
      if (!full) return p;
      ++i;
      continue;
    }
    Rat s = -t.c / div->leading_coefficient();
    Monomial q = div->leading_monomial().quotient_of(t.m);
    p.add_scaled(*div, s, q);
  }
  return p;
}

inline ParamPoly spoly(const ParamPoly& f, const ParamPoly& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  ParamPoly r;
  r.add_scaled(f, 1 / f.leading_coefficient(), f.leading_monomial().quotient_of(l));
  r.add_scaled(g, -1 / g.leading_coefficient(), g.leading_monomial().quotient_of(l));
  return r;
}

/// Keeps generators with minimal leading monomials and fully reduces them.
inline std::vector<ParamPoly> interreduce(std::vector<ParamPoly> G) {
  std::sort(G.begin(), G.end(), [](const ParamPoly& a, const ParamPoly& b) {
    return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<ParamPoly> keep;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& k : keep)
      if (k.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) keep.push_back(std::move(g));
  }
  std::vector<ParamPoly> out;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::vector<ParamPoly> others;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (j != i) others.push_back(keep[j]);
    ParamPoly r = reduce(keep[i], others, true);
    out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(), [](const ParamPoly& a, const ParamPoly& b) { return compare(a, b) > 0; });
  return out;
}

struct PairKey {
  int deg;
  int j, i;  // later j means created later
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

}  // namespace detail

/// Buchberger with normal selection: smallest lcm degree first, then creation order.
inline GroebnerBasis buchberger(const std::vector<ParamPoly>& gens, const GroebnerOptions& opt = {}) {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  GroebnerBasis out;
  out.truncated_at = opt.max_degree;
  if (opt.max_degree >= 0)
    for (const auto& g : gens)
      if (!g.is_homogeneous()) throw NotHomogeneousError("truncated Buchberger needs homogeneous input");

  std::vector<ParamPoly> G;
  using detail::PairKey;
  std::set<PairKey> pending;
  std::set<std::pair<int, int>> pending_ij;

  auto deadline_check = [&] {
    if (opt.budget && clock::now() - start > *opt.budget)
      throw BudgetExceeded("Groebner computation exceeded its time budget");
  };
  auto add = [&](ParamPoly h) {
    h = h.monic();
    int k = static_cast<int>(G.size());
    for (int i = 0; i < k; ++i) {
      int d = Monomial::lcm(G[i].leading_monomial(), h.leading_monomial()).deg;
      if (opt.max_degree >= 0 && d > opt.max_degree) continue;
      pending.insert({d, k, i});
      pending_ij.insert({i, k});
    }
    G.push_back(std::move(h));
  };

  // seed in input order, each reduced by what is already there
  for (const auto& g0 : gens) {
    ParamPoly g = detail::reduce(g0, G, true);
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      out.generators = {ParamPoly(1)};
      return out;
    }
    add(std::move(g));
  }
  if (G.empty()) return out;

  auto criterion_chain = [&](int i, int j, const Monomial& l) {
    for (int k = 0; k < static_cast<int>(G.size()); ++k) {
      if (k == i || k == j) continue;
      if (!G[k].leading_monomial().divides(l)) continue;
      auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
      if (pending_ij.count({p1.first, p1.second}) || pending_ij.count({p2.first, p2.second})) continue;
      return true;
    }
    return false;
  };

  while (!pending.empty()) {
    deadline_check();
    PairKey pk = *pending.begin();
    pending.erase(pending.begin());
    pending_ij.erase({pk.i, pk.j});
    const Monomial& li = G[pk.i].leading_monomial();
    const Monomial& lj = G[pk.j].leading_monomial();
    if (li.coprime(lj)) {
      ++out.skipped_pairs;
      continue;
    }
    Monomial l = Monomial::lcm(li, lj);
    if (criterion_chain(pk.i, pk.j, l)) {
      ++out.skipped_pairs;
      continue;
    }
    ++out.spairs;
    ParamPoly r = detail::reduce(detail::spoly(G[pk.i], G[pk.j]), G, false);
    if (r.is_zero()) {
      ++out.zero_reductions;
      continue;
    }
    if (r.is_constant()) {
      out.generators = {ParamPoly(1)};
      out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
      return out;
    }
    add(detail::reduce(r, G, true));
  }
  out.generators = detail::interreduce(G);
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
  return out;
}

/// Complete division remainder; zero iff p is in the ideal (for a truncated
/// basis: iff p is homogeneous of degree <= truncated_at and in the ideal).
inline ParamPoly normal_form(const ParamPoly& p, const GroebnerBasis& gb) {
  return detail::reduce(p, gb.generators, true);
}

inline bool ideal_member(const ParamPoly& p, const GroebnerBasis& gb) { return normal_form(p, gb).is_zero(); }

inline int max_degree(const std::vector<ParamPoly>& ps) {
  int d = 0;
  for (const auto& p : ps) d = std::max(d, p.degree());
  return d;
}
inline bool all_homogeneous(const std::vector<ParamPoly>& ps) {
  return std::all_of(ps.begin(), ps.end(), [](const ParamPoly& p) { return p.is_homogeneous(); });
}

/// Basis good enough to decide membership of every polynomial in `probes`:
/// degree-truncated when everything is homogeneous, full otherwise.
inline GroebnerBasis membership_basis(const std::vector<ParamPoly>& gens, const std::vector<ParamPoly>& probes,
                                      GroebnerOptions opt = {}) {
  if (all_homogeneous(gens) && all_homogeneous(probes)) opt.max_degree = std::max(max_degree(gens), max_degree(probes));
  return buchberger(gens, opt);
}

struct IdealComparison {
  bool equal = false;
  std::vector<ParamPoly> only_in_a;  // generators of A not in ideal(B)
  std::vector<ParamPoly> only_in_b;
};

inline IdealComparison compare_ideals(const std::vector<ParamPoly>& A, const std::vector<ParamPoly>& B,
                                      const GroebnerOptions& opt = {}) {
  IdealComparison r;
  GroebnerBasis ga = membership_basis(A, B, opt), gb = membership_basis(B, A, opt);
  for (const auto& p : A)
    if (!ideal_member(p, gb)) r.only_in_a.push_back(p);
  for (const auto& p : B)
    if (!ideal_member(p, ga)) r.only_in_b.push_back(p);
  r.equal = r.only_in_a.empty() && r.only_in_b.empty();
  return r;
}

// ---------------------------------------------------------------- Hilbert series

/// Integer polynomial in t, coefficient i at index i.
using TPoly = std::vector<mpz_class>;

namespace detail {

inline void trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline TPoly tadd(const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}
inline TPoly tmul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}
inline TPoly one_minus_t_pow(int d) {
  TPoly r(d + 1);
  r[0] = 1;
  r[d] -= 1;
  trim(r);
  return r;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return grevlex_cmp(a, b) > 0;
  });
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool red = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

/// Numerator N of HS(S/J) = N(t) / (1 - t)^r, independent of r.
inline TPoly hilbert_numerator(std::vector<Monomial> J) {
  J = minimalize(std::move(J));
  if (J.empty()) return {mpz_class(1)};
  for (const auto& m : J)
    if (m.is_one()) return {};
  bool coprime = true;
  for (std::size_t i = 0; i < J.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < J.size(); ++j)
      if (!J[i].coprime(J[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    TPoly r{mpz_class(1)};
    for (const auto& m : J) r = tmul(r, one_minus_t_pow(m.deg));
    return r;
  }
  // pivot on the variable occurring in the most generators
  std::array<int, kNumSymbols> count{};
  for (const auto& m : J)
    for (int v = 0; v < kNumSymbols; ++v) count[v] += m.e[v] > 0;
  int x = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial xv = Monomial::var(static_cast<ParamSymbol>(x));
  std::vector<Monomial> plus{xv}, colon;
  for (const auto& m : J) {
    if (!m.e[x]) plus.push_back(m);
    colon.push_back(m.e[x] ? xv.quotient_of(m) : m);
  }
  TPoly a = hilbert_numerator(std::move(plus));
  TPoly b = hilbert_numerator(std::move(colon));
  b.insert(b.begin(), mpz_class(0));  // t · N(J : x)
  return tadd(a, b);
}

}  // namespace detail

struct HilbertResult {
  int ring_vars = 0;
  int affine_dim = -1;      // -1 for the unit ideal
  int projective_dim = -2;  // affine_dim - 1
  long degree = 0;
  TPoly numerator;
};

/// Dimension and degree from the leading-term ideal of a homogeneous basis over
/// the polynomial ring in `ring` (must contain every symbol of the basis).
inline HilbertResult hilbert_dimension(const GroebnerBasis& gb, const std::set<ParamSymbol>& ring) {
  if (gb.truncated_at >= 0) throw std::invalid_argument("hilbert_dimension needs a full basis");
  std::vector<Monomial> lts;
  for (const auto& g : gb.generators) {
    if (!g.is_homogeneous()) throw NotHomogeneousError("hilbert_dimension: inhomogeneous generator " + to_string(g));
    for (auto s : g.symbols())
      if (!ring.count(s)) throw std::invalid_argument("hilbert_dimension: symbol outside the ring: " + std::string(name(s)));
    lts.push_back(g.leading_monomial());
  }
  HilbertResult r;
  r.ring_vars = static_cast<int>(ring.size());
  r.numerator = detail::hilbert_numerator(lts);
  if (r.numerator.empty()) return r;
  // divide out (1 - t) as often as possible
  TPoly q = r.numerator;
  int k = 0;
  for (;;) {
    mpz_class at1 = 0;
    for (const auto& c : q) at1 += c;
    if (at1 != 0) {
      r.degree = at1.get_si();
      break;
    }
    // synthetic division by (1 - t): q = (1 - t) s  ⇒  s_i = Σ_{j<=i} q_j
    TPoly s(q.size() - 1);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      s[i] = acc;
    }
    q = s;
    ++k;
  }
  r.affine_dim = r.ring_vars - k;
  r.projective_dim = r.affine_dim - 1;
  return r;
}

/// Brute-force dim_k (S/J)_d for a monomial ideal J: counts standard monomials
/// of degree d in `nvars` variables (test oracle).
inline long standard_monomial_count(const std::vector<Monomial>& J, const std::vector<ParamSymbol>& vars, int d) {
  long count = 0;
  std::vector<int> e(vars.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == vars.size() || vars.empty()) {
      if (!vars.empty()) e[pos] = left;
      else if (left) return;
      Monomial m;
      for (std::size_t i = 0; i < vars.size(); ++i) m.e[static_cast<int>(vars[i])] = static_cast<std::uint8_t>(e[i]);
      m.deg = static_cast<std::uint8_t>(d);
      for (const auto& g : J)
        if (g.divides(m)) return;
      ++count;
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, d);
  return count;
}

}  // namespace doa
