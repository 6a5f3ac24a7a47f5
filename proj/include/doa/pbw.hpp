#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doa/families.hpp"
#include "doa/groebner.hpp"

namespace doa {

struct Provenance {
  std::string source;  // psiL, firstObstruction, secondObstruction, imageConstraint, extensionConstraint, invariance, paperLedger
  std::optional<Perm> g;
  std::vector<BasisIndex> triple;
  std::string label;
};

/// Normalized, deduplicated generator list with one provenance record each.
struct ObstructionSystem {
  int n = 4;
  std::vector<ParamPoly> generators;
  std::vector<Provenance> provenance;
  std::optional<std::set<ParamSymbol>> ring;

  /// Normalizes p and appends it unless zero or already present.
  bool add(const ParamPoly& p, Provenance prov) {
    if (p.is_zero()) return false;
    ParamPoly q = normalize_generator(p);
    if (index_.empty() && !generators.empty()) reindex();
    if (!index_.insert(q).second) return false;
    generators.push_back(std::move(q));
    provenance.push_back(std::move(prov));
    return true;
  }
  void append(const ObstructionSystem& o) {
    for (std::size_t i = 0; i < o.generators.size(); ++i) add(o.generators[i], o.provenance[i]);
  }
  /// Ascending in the term-by-term grevlex comparison.
  void sort() {
    std::vector<std::size_t> idx(generators.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return compare(generators[a], generators[b]) < 0; });
    std::vector<ParamPoly> g;
    std::vector<Provenance> p;
    for (auto i : idx) {
      g.push_back(generators[i]);
      p.push_back(provenance[i]);
    }
    generators = std::move(g);
    provenance = std::move(p);
  }
  bool empty() const { return generators.empty(); }
  std::size_t size() const { return generators.size(); }
  std::set<ParamSymbol> symbols() const {
    std::set<ParamSymbol> s;
    for (const auto& g : generators)
      for (auto x : g.symbols()) s.insert(x);
    return s;
  }
  bool vanishes_at(const NumericPoint& pt) const {
    for (const auto& g : generators)
      if (!::doa::is_zero(g.eval(pt))) return false;
    return true;
  }

 private:
  struct Less {
    bool operator()(const ParamPoly& a, const ParamPoly& b) const { return compare(a, b) < 0; }
  };
  std::set<ParamPoly, Less> index_;
  void reindex() { index_.insert(generators.begin(), generators.end()); }
};

enum class Status { Pass, Fail, Conditional };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "conditional";
  }
}

struct PropertyResult {
  std::string id;    // image, invariance, psiL, firstObstruction, secondObstruction
  std::string name;  // human readable
  Status status = Status::Pass;
  std::vector<Witness> witnesses;
  ObstructionSystem residual;
};

struct VerificationReport {
  int n = 4;
  Status overall = Status::Pass;
  std::vector<PropertyResult> properties;
  ObstructionSystem system;  // union of the residuals when conditional
  std::vector<std::string> warnings;

  const PropertyResult& property(const std::string& id) const {
    for (const auto& p : properties)
      if (p.id == id) return p;
    throw std::out_of_range("no property " + id);
  }
};

inline constexpr std::size_t kMaxWitnesses = 12;

namespace detail {

inline void collect_three(const ThreeCochain& t, const std::string& source, PropertyResult& pr, int n) {
  pr.residual.n = n;
  for (const auto& [g, comp] : t.table)
    for (const auto& [tri, val] : comp) {
      bool first = true;
      for (const auto& [m, coef] : val.terms()) {
        pr.residual.add(coef, {source, g, {tri[0], tri[1], tri[2]}, ""});
        if (first && pr.witnesses.size() < kMaxWitnesses) {
          pr.witnesses.push_back({source, g, {tri[0], tri[1], tri[2]}, to_string(val)});
          first = false;
        }
      }
    }
}

inline void classify(PropertyResult& pr) {
  if (pr.residual.empty()) {
    pr.status = Status::Pass;
    pr.witnesses.clear();
    return;
  }
  bool hard = false;
  for (const auto& g : pr.residual.generators)
    if (g.is_constant()) hard = true;
  pr.status = hard ? Status::Fail : Status::Conditional;
}

}  // namespace detail

/// ψ(κ^L), φ(κ^L,κ^L) − 2ψ(κ^C), φ(κ^C,κ^L) for κ on V (bar tables are extended first).
struct ObstructionCochains {
  ThreeCochain psiL, first, second;
  std::vector<std::string> warnings;
};

inline ObstructionCochains obstruction_cochains(const TwoCochain& k_in, int jobs = default_jobs()) {
  TwoCochain k = k_in.bar ? extend_from_std(k_in) : k_in;
  TwoCochain L = k.linear_part(), C = k.constant_part();
  ObstructionCochains out;
  out.psiL = psi(L, jobs);
  ThreeCochain pLL = phi(L, L, false, jobs);
  out.first = pLL - psi(C, jobs).scaled(ParamPoly(2));
  out.second = phi(C, L, false, jobs);
  return out;
}

/// The five PBW properties: image, invariance, psi(kL) = 0, phi(kL,kL) = 2 psi(kC), phi(kC,kL) = 0.
inline VerificationReport check_properties(const TwoCochain& k_in, int jobs = default_jobs()) {
  VerificationReport rep;
  rep.n = k_in.n;
  TwoCochain k = k_in.bar ? extend_from_std(k_in) : k_in;
  rep.system.n = k.n;

  PropertyResult img{"image", "image condition", Status::Pass, {}, {}};
  img.residual.n = k.n;
  for (const auto& r : image_residuals(k)) {
    for (const auto& d : r.diffs) img.residual.add(d, {"imageConstraint", r.g, {r.pair.first, r.pair.second}, ""});
    if (img.witnesses.size() < kMaxWitnesses)
      img.witnesses.push_back({"image", r.g, {r.pair.first, r.pair.second}, to_string(k.get(r.g, r.pair.first, r.pair.second).linear)});
  }
  if (k_in.bar) {
    for (const auto& [g, e] : bar_consistency_residual(k_in)) {
      for (const auto& [b, x] : e.linear.coords()) img.residual.add(x, {"imageConstraint", g, {}, "bar-relation"});
      img.residual.add(e.constant, {"imageConstraint", g, {}, "bar-relation"});
      if (img.witnesses.size() < kMaxWitnesses) img.witnesses.push_back({"bar-relation", g, {}, to_string(e)});
    }
  }
  detail::classify(img);

  PropertyResult inv{"invariance", "G-invariance", Status::Pass, {}, {}};
  inv.residual.n = k.n;
  for (const auto& r : invariance_residuals(k, generators(k.n))) {
    for (const auto& [b, x] : r.diff.linear.coords()) inv.residual.add(x, {"invariance", r.g, {r.pair.first, r.pair.second}, ""});
    inv.residual.add(r.diff.constant, {"invariance", r.g, {r.pair.first, r.pair.second}, ""});
    if (inv.witnesses.size() < kMaxWitnesses)
      inv.witnesses.push_back({"invariance", r.g, {r.pair.first, r.pair.second}, "h=" + to_string(r.h) + ": " + to_string(r.diff)});
  }
  detail::classify(inv);

  auto oc = obstruction_cochains(k, jobs);
  PropertyResult p2{"psiL", "psi of linear part", Status::Pass, {}, {}}, p3{"firstObstruction", "first obstruction", Status::Pass, {}, {}},
      p4{"secondObstruction", "second obstruction", Status::Pass, {}, {}};
  detail::collect_three(oc.psiL, "psiL", p2, k.n);
  detail::collect_three(oc.first, "firstObstruction", p3, k.n);
  detail::collect_three(oc.second, "secondObstruction", p4, k.n);
  for (auto* p : {&p2, &p3, &p4}) detail::classify(*p);

  rep.properties = {img, inv, p2, p3, p4};
  bool any_fail = false, any_cond = false;
  for (const auto& p : rep.properties) {
    any_fail |= p.status == Status::Fail;
    any_cond |= p.status == Status::Conditional;
    rep.system.append(p.residual);
  }
  rep.system.sort();
  rep.overall = any_fail ? Status::Fail : any_cond ? Status::Conditional : Status::Pass;
  return rep;
}

struct InvarianceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generators of the last three properties for a cochain that is invariant by construction.
inline ObstructionSystem extract_system(const TwoCochain& k_in, int jobs = default_jobs()) {
  TwoCochain k = k_in.bar ? extend_from_std(k_in) : k_in;
  auto inv = invariance_residuals(k, generators(k.n));
  if (!inv.empty())
    throw InvarianceFailure("extract_system: cochain is not invariant (" + to_string(inv.front().g) + ", " +
                            to_string(inv.front().diff) + ")");
  auto oc = obstruction_cochains(k, jobs);
  PropertyResult p2, p3, p4;
  detail::collect_three(oc.psiL, "psiL", p2, k.n);
  detail::collect_three(oc.first, "firstObstruction", p3, k.n);
  detail::collect_three(oc.second, "secondObstruction", p4, k.n);
  ObstructionSystem s;
  s.n = k.n;
  s.append(p2.residual);
  s.append(p3.residual);
  s.append(p4.residual);
  s.sort();
  return s;
}

/// Conditions for a cochain on V to restrict to h*⊕h and back: values in h*⊕h
/// (zero block sums) and x_[n], y_[n] in the kernel.
inline ObstructionSystem std_constraints(const TwoCochain& k) {
  if (k.bar) throw std::invalid_argument("std_constraints: expects a cochain on V");
  ObstructionSystem s;
  s.n = k.n;
  const int n = k.n;
  for (const auto& [g, comp] : k.table)
    for (const auto& [p, e] : comp) {
      ParamPoly sx, sy;
      for (const auto& [b, x] : e.linear.coords()) (b.kind == Kind::X ? sx : sy) += x;
      s.add(sx, {"imageConstraint", g, {p.first, p.second}, "x-block sum"});
      s.add(sy, {"imageConstraint", g, {p.first, p.second}, "y-block sum"});
    }
  std::vector<Vect> ws;
  for (Kind kd : {Kind::X, Kind::Y})
    for (int i = 1; i < n; ++i) ws.push_back(Vect({kd, static_cast<std::uint8_t>(i + 1)}) - Vect({kd, static_cast<std::uint8_t>(i)}));
  Vect u0[2] = {full_sum(Kind::X, n), full_sum(Kind::Y, n)};
  auto record = [&](const Perm& g, const Entry& e, const std::string& label) {
    for (const auto& [b, x] : e.linear.coords()) s.add(x, {"extensionConstraint", g, {}, label});
    s.add(e.constant, {"extensionConstraint", g, {}, label});
  };
  for (const auto& [g, comp] : k.table) {
    for (const auto& u : u0)
      for (const auto& w : ws) record(g, eval_component(comp, n, w, u), "kernel");
    record(g, eval_component(comp, n, u0[0], u0[1]), "kernel");
  }
  s.sort();
  return s;
}

// -------------------------------------------------------------- reference ledger

struct UnknownLedgerError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace ledger_detail {

struct Vars {
  ParamPoly a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, N;
  explicit Vars(int n)
      : a1(ParamSymbol::a1), a2(ParamSymbol::a2), a3(ParamSymbol::a3), a4(ParamSymbol::a4), a5(ParamSymbol::a5),
        a6(ParamSymbol::a6), a7(ParamSymbol::a7), b1(ParamSymbol::b1), b2(ParamSymbol::b2), b3(ParamSymbol::b3),
        b4(ParamSymbol::b4), b5(ParamSymbol::b5), b6(ParamSymbol::b6), b7(ParamSymbol::b7), al(ParamSymbol::alpha),
        be(ParamSymbol::beta), c(ParamSymbol::c), a(ParamSymbol::a), ap(ParamSymbol::aperp), b(ParamSymbol::b),
        bp(ParamSymbol::bperp), N(n) {}
};

using Block = std::vector<ParamPoly>;

inline Block obstr1_part1(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  return {a1 * (a5 + a6 + n * a7) - b1 * a2 - b5 * a6 + a5 * (b5 + b6 + n * b7) + b7 * (a3 - a5 - a6),
          b1 * (a5 + a6 + n * a7) - b1 * b2 + b1 * a5 + b5 * (b5 - a1 + n * b7) + b7 * (b3 - b5 - b6)};
}
inline Block obstr1_part2(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  return {-a2 * (b5 + b6 + n * b7) - a2 * a1 - a2 * b6 + a6 * (a6 + b2 + n * a7) + a7 * (a3 - a5 - a6),
          -b2 * (b5 + b6 + n * b7) - a2 * b1 - a6 * b5 + b6 * (a5 + a6 + n * a7) + a7 * (b3 - b5 - b6)};
}
inline Block obstr1_part3(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  ParamPoly n1 = n - 1;
  return {a7 * (b3 - b5) - a4 * b6 + (b4 - b7) * (a4 + n1 * a7 + a6),
          a1 * (a3 + n * a4) + a5 * (b3 + n * b4) + b4 * (a3 - a5 - a6) - a2 * b1 - b5 * a6,
          -a1 * (a5 + a6 + n * a7) - a5 * (b5 + n * b7) - b7 * (a3 - a5 - a6) + a2 * b1 + b3 * a6 - a3 * b6,
          b7 * (b3 - b5) - b4 * b6 + (b4 - b7) * (a1 + b4 + n1 * b7 + b6) - b1 * (a4 - a7),
          b1 * (a5 - b2 + a3 + n * a4) - b5 * (a1 + b6 - b3 - n * b4) + b4 * (b3 - b5 - b6),
          b1 * (-b2 + a5 + a3 + n * a7) + b5 * (b5 + n * b7) + b7 * (b3 - b5 - b6) - a1 * (b3 - b6)};
}
inline Block obstr1_part4(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  ParamPoly n1 = n - 1;
  return {a7 * (a3 - a6) - a4 * a5 + (a4 - a7) * (-b2 + a4 + n1 * a7 + a5) + a2 * (b4 - b7),
          -a2 * (a1 + b6 + b3 + n * b4) + a6 * (b2 - a5 + a3 + n * a4) + a4 * (a3 - a5 - a6),
          a2 * (a1 + b6 + b3 + n * b7) - a6 * (a6 + n * a7) - a7 * (a3 - a5 - a6) - b2 * (a3 - a5),
          b7 * (a3 - a6) - b4 * a5 + (a4 - a7) * (b4 + n1 * b7 + b5),
          -b2 * (b3 + n * b4) + b6 * (a3 + n * a4) + a4 * (b3 - b5 - b6) - a2 * b1 - a6 * b5,
          b2 * (b5 + b6 + n * b7) - b6 * (a6 + n * a7) - a7 * (b3 - b5 - b6) + a2 * b1 + a3 * b5 - b3 * a5};
}
inline Block obstr2_kappa_c1(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  ParamPoly n1 = n - 1;
  return {al * (a1 - b6 + b4 - b7) - be * (a1 - b3 + b5 - n1 * (b4 - b7)),
          al * (-b2 - a5 + a4 - a7) + be * (b2 + a3 - a6 + n1 * (a4 - a7))};
}
inline Block obstr2_kappa_cref(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  return {c * (a1 - b6), c * (Rat(2) * a1 - b3 + b5 - b6), c * (a5 + b2), c * (Rat(2) * b2 + a3 + a5 - a6)};
}
/// What the kappaCref block forces once c is nonzero.
inline Block cref_relations(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  return {a1 - b6, a1 - b3 + b5, b2 + a5, b2 + a3 - a6};
}
inline Block obstr1_simplified(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  ParamPoly n1 = n - 1;
  return {a1 * (a4 - a7) - (b4 - b7) * (a6 + a4 + n1 * a7),
          b1 * (a4 - a7) - (b4 - b7) * (b6 + b4 + n1 * b7),
          a1 * (a3 + n * a4) + a5 * (b3 + n * b4) - b1 * a2 - b5 * a6,
          a1 * (a3 + n * a7) + a5 * (b3 + n * b7) - b1 * a2 - b5 * a6,
          b1 * (a3 + n * a4) + b5 * (b3 + n * b4) - Rat(2) * b1 * b2 - Rat(2) * b5 * b6,
          b1 * (a3 + n * a7) + b5 * (b3 + n * b7) - Rat(2) * b1 * b2 - Rat(2) * b5 * b6,
          -a2 * (b3 + n * b4) + a6 * (a3 + n * a4) - Rat(2) * a1 * a2 - Rat(2) * a5 * a6,
          -a2 * (b3 + n * b7) + a6 * (a3 + n * a7) - Rat(2) * a1 * a2 - Rat(2) * a5 * a6};
}
inline Block obstr2_kappa_c1_simplified(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  ParamPoly n1 = n - 1;
  return {(al + n1 * be) * (b4 - b7), (al + n1 * be) * (a4 - a7)};
}
inline Block obstr1_simplified_final(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  return {a1 * (a3 + n * a4) + a5 * (b3 + n * b4) - b1 * a2 - b5 * a6,
          b1 * (a3 + n * a4) + b5 * (b3 + n * b4) - Rat(2) * b1 * b2 - Rat(2) * b5 * b6,
          -a2 * (b3 + n * b4) + a6 * (a3 + n * a4) - Rat(2) * a1 * a2 - Rat(2) * a5 * a6};
}
inline Block doubled_std_rep(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  return {a3 + n * a4, a5 + a6 + n * a7, b3 + n * b4, b5 + b6 + n * b7};
}
inline Block trivial_rep(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  return {(a3 + n * a4) * (b5 + b6 + n * b7) - (b3 + n * b4) * (a5 + a6 + n * a7)};
}
inline Block std_rep(const Vars&) {
  Block out;
  const int idx[] = {1, 2, 3, 5, 6};
  for (int p = 0; p < 5; ++p)
    for (int q = p + 1; q < 5; ++q)
      out.push_back(sym(a_sym(idx[p])) * sym(b_sym(idx[q])) - sym(b_sym(idx[p])) * sym(a_sym(idx[q])));
  return out;
}
inline Block doubled_trivial_rep(const Vars&) {
  Block out;
  for (int i : {1, 2, 3, 5, 6}) {
    out.push_back(sym(a_sym(i)));
    out.push_back(sym(b_sym(i)));
  }
  return out;
}
inline Block obstr2_phi_c1(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  ParamPoly n2 = n - 2, n3 = n - 3;
  return {al * a + be * (a + n2 * ap), al * ap + be * (Rat(2) * a + n3 * ap), al * b + be * (b + n2 * bp),
          al * bp + be * (Rat(2) * b + n3 * bp)};
}
inline Block std_refl_relations(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  ParamPoly n2 = n - 2;
  return {Rat(2) * a + n2 * ap, Rat(2) * b + n2 * bp};
}
inline Block rca_std(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  return {al + (n - 1) * be};
}
/// The combined-family bindings written as relations.
inline Block combined_relations(const Vars& v) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, b4, b5, b6, b7, al, be, c, a, ap, b, bp, n] = v;
  ParamPoly n2 = n - 2;
  return {a1, a2, a3, a5, a6, b1, b2, b3, b5, b6, a4 - a7, b4 - b7, al - be, Rat(2) * a + n2 * ap, Rat(2) * b + n2 * bp};
}

struct LedgerEntry {
  std::string name;
  std::vector<std::string> parts;  // composite entries
  Block (*fn)(const Vars&) = nullptr;
};

inline const std::vector<LedgerEntry>& entries() {
  static const std::vector<LedgerEntry> e = {
      {"Obstr1PartI", {}, obstr1_part1},
      {"Obstr1PartII", {}, obstr1_part2},
      {"Obstr1PartIII", {}, obstr1_part3},
      {"Obstr1PartIV", {}, obstr1_part4},
      {"Obstr1", {"Obstr1PartI", "Obstr1PartII", "Obstr1PartIII", "Obstr1PartIV"}, nullptr},
      {"Obstr2kappaC1", {}, obstr2_kappa_c1},
      {"Obstr2kappaCref", {}, obstr2_kappa_cref},
      {"LOA-full", {"Obstr1", "Obstr2kappaC1", "Obstr2kappaCref"}, nullptr},
      {"CrefRelations", {}, cref_relations},
      {"Obstr1Simplified", {}, obstr1_simplified},
      {"Obstr2kappaC1Simplified", {}, obstr2_kappa_c1_simplified},
      {"Obstr1SimplifiedFinal", {}, obstr1_simplified_final},
      {"DoubledStdRep", {}, doubled_std_rep},
      {"TrivialRep", {}, trivial_rep},
      {"StdRep", {}, std_rep},
      {"DoubledTrivialRep", {}, doubled_trivial_rep},
      {"Obstr2PhiC1C2C3L2", {}, obstr2_phi_c1},
      {"StdReflRelations", {}, std_refl_relations},
      {"RcaStd", {}, rca_std},
      {"CombinedRelations", {}, combined_relations},
  };
  return e;
}

}  // namespace ledger_detail

inline std::vector<std::string> ledger_names() {
  std::vector<std::string> out;
  for (const auto& e : ledger_detail::entries()) out.push_back(e.name);
  return out;
}

/// Raw transcribed block (not normalized), in display order.
inline std::vector<ParamPoly> ledger_raw(const std::string& name, int n) {
  require_n(n);
  for (const auto& e : ledger_detail::entries()) {
    if (e.name != name) continue;
    if (e.fn) return e.fn(ledger_detail::Vars(n));
    std::vector<ParamPoly> out;
    for (const auto& p : e.parts) {
      auto b = ledger_raw(p, n);
      out.insert(out.end(), b.begin(), b.end());
    }
    return out;
  }
  throw UnknownLedgerError("unknown ledger block '" + name + "'");
}

inline ObstructionSystem paper_ledger(const std::string& name, int n) {
  ObstructionSystem s;
  s.n = n;
  auto raw = ledger_raw(name, n);
  for (std::size_t i = 0; i < raw.size(); ++i)
    s.add(raw[i], {"paperLedger", std::nullopt, {}, name + "[" + std::to_string(i) + "]"});
  return s;
}

inline ObstructionSystem paper_ledger(const std::vector<std::string>& names, int n) {
  ObstructionSystem s;
  s.n = n;
  for (const auto& nm : names) s.append(paper_ledger(nm, n));
  return s;
}

// -------------------------------------------------------------- comparison

enum class CompareMode { Set, Ideal };

struct ComparisonReport {
  CompareMode mode = CompareMode::Ideal;
  bool equal = false;
  std::vector<ParamPoly> only_in_a, only_in_b;
  std::size_t size_a = 0, size_b = 0;
};

inline ComparisonReport compare_systems(const ObstructionSystem& A, const ObstructionSystem& B, CompareMode mode,
                                        const GroebnerOptions& opt = {}) {
  if (A.n != B.n) throw SizeError("compare_systems: different n");
  ComparisonReport r;
  r.mode = mode;
  r.size_a = A.size();
  r.size_b = B.size();
  if (mode == CompareMode::Set) {
    auto less = [](const ParamPoly& x, const ParamPoly& y) { return compare(x, y) < 0; };
    std::set<ParamPoly, decltype(less)> sa(A.generators.begin(), A.generators.end(), less),
        sb(B.generators.begin(), B.generators.end(), less);
    for (const auto& p : sa)
      if (!sb.count(p)) r.only_in_a.push_back(p);
    for (const auto& p : sb)
      if (!sa.count(p)) r.only_in_b.push_back(p);
  } else {
    auto c = compare_ideals(A.generators, B.generators, opt);
    r.only_in_a = std::move(c.only_in_a);
    r.only_in_b = std::move(c.only_in_b);
  }
  r.equal = r.only_in_a.empty() && r.only_in_b.empty();
  return r;
}

// -------------------------------------------------------------- doubled standard

struct MembershipCertificate {
  ParamPoly target;
  bool member = false;
};

struct NonexistenceReport {
  int n = 4;
  ObstructionSystem augmented;  // extracted lie system + std constraints
  std::vector<MembershipCertificate> certificates;
  bool linear_part_forced_zero = false;
  bool c_free = false;  // c is not in the ideal
};

/// No Lie orbifold map with nonzero linear part on h*⊕h: the lie system on V
/// plus image and kernel constraints contains a_i², b_i² for all i (so every
/// linear parameter vanishes on the variety) while c stays free.
inline NonexistenceReport std_nonexistence_check(int n, int jobs = default_jobs()) {
  require_n(n);
  NonexistenceReport r;
  r.n = n;
  TwoCochain k = family_cochain("lie", n);
  r.augmented = extract_system(k, jobs);
  r.augmented.append(std_constraints(k));
  r.augmented.append(paper_ledger("DoubledStdRep", n));
  r.augmented.sort();

  std::vector<ParamPoly> targets;
  targets.push_back(sym(ParamSymbol::a7) * sym(ParamSymbol::a7));
  targets.push_back(sym(ParamSymbol::b7) * sym(ParamSymbol::b7));
  targets.push_back(sym(ParamSymbol::a7) * sym(ParamSymbol::b7));
  for (int i = 1; i <= 7; ++i) {
    targets.push_back(sym(a_sym(i)) * sym(a_sym(i)));
    targets.push_back(sym(b_sym(i)) * sym(b_sym(i)));
  }
  for (int i : {1, 2}) {
    targets.push_back(sym(a_sym(i)));
    targets.push_back(sym(b_sym(i)));
  }
  ParamPoly c = sym(ParamSymbol::c);
  std::vector<ParamPoly> probes = targets;
  probes.push_back(c);
  GroebnerBasis gb = membership_basis(r.augmented.generators, probes);
  bool all = true;
  for (const auto& t : targets) {
    bool m = ideal_member(t, gb);
    r.certificates.push_back({t, m});
    all = all && m;
  }
  r.certificates.push_back({c, ideal_member(c, gb)});
  r.c_free = !r.certificates.back().member;
  r.linear_part_forced_zero = all;
  return r;
}

}  // namespace doa
