// One line per acceptance criterion. Exit status covers criteria 1-11;
// criterion 12 is a conjecture check and is reported without affecting it.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "doa/doa.hpp"

using namespace doa;
using P = ParamSymbol;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& fn) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  bool in_time = limit_s <= 0 || secs <= limit_s;
  if (!in_time) o.detail += " [over time limit " + std::to_string(limit_s) + " s]";
  bool ok = o.pass && in_time;
  std::ostringstream line;
  line.precision(2);
  line << std::fixed << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << secs << " s)";
  if (!o.detail.empty()) line << " -- " << o.detail;
  std::cout << line.str() << std::endl;
  return ok;
}

ObstructionSystem coefficients(const ThreeCochain& t, int n) {
  PropertyResult pr;
  pr.residual.n = n;
  detail::collect_three(t, "secondObstruction", pr, n);
  return pr.residual;
}

Outcome c1() {
  for (int n = 4; n <= 8; ++n)
    if (invariant_two_form_dim(n) != 2) return {false, "n=" + std::to_string(n)};
  return {true, "dim = 2 for n = 4..8"};
}

Outcome c2() {
  int checked = 0;
  for (int n : {4, 5, 6}) {
    for (const auto& f : family_names()) {
      TwoCochain k = family_cochain(f, n);
      if (!check_invariance(k).invariant) return {false, f + " not invariant at n=" + std::to_string(n)};
      if (!check_image(k).image_ok) return {false, f + " image at n=" + std::to_string(n)};
      if (!check_support_codim(k).codim_ok) return {false, f + " codim at n=" + std::to_string(n)};
      ++checked;
    }
    if (!(kappa_tri(n, TriMode::Formula) == kappa_tri(n, TriMode::Matrix))) return {false, "tri modes differ"};
  }
  return {true, std::to_string(checked) + " family instances; tri modes agree"};
}

Outcome c3() {
  for (int n : {4, 5, 6})
    if (!psi(kappa1_linear(n)).is_zero() || !psi(kappa_refl_linear(n)).is_zero()) return {false, "n=" + std::to_string(n)};
  return {true, "n = 4, 5, 6"};
}

Outcome c4() {
  for (int n : {4, 5}) {
    ThreeCochain L2 = phi(kappa_refl_linear(n), kappa_refl_linear(n));
    if (!(L2 - psi(kappa_tri(n)).scaled(ParamPoly(2))).is_zero()) return {false, "identity fails at n=" + std::to_string(n)};
    for (const auto& [g, _] : L2.table)
      if (!is_3cycle(g)) return {false, "component on " + to_string(g)};
  }
  return {true, "n = 4, 5; support within 3-cycles"};
}

Outcome c5() {
  for (int n : {4, 5}) {
    TwoCochain L = kappa_refl_linear(n);
    if (!phi(kappa_refl_constant(n) + kappa_tri(n), L).is_zero()) return {false, "refl+tri term nonzero at n=" + std::to_string(n)};
    auto sys = coefficients(phi(kappa1_constant(n), L), n);
    auto cmp = compare_systems(sys, paper_ledger("Obstr2PhiC1C2C3L2", n), CompareMode::Set);
    if (!cmp.equal) return {false, "four conditions differ at n=" + std::to_string(n)};
  }
  return {true, "n = 4, 5; four conditions equal as a set"};
}

Outcome c6() {
  std::string counts;
  for (int n : {4, 5, 6}) {
    auto s = extract_system(family_cochain("lie", n));
    auto cmp = compare_systems(s, paper_ledger("LOA-full", n), CompareMode::Ideal);
    if (!cmp.equal) return {false, "ideal differs at n=" + std::to_string(n)};
    counts += (counts.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(s.size());
  }
  return {true, "ideal-equal; deduplicated generators " + counts};
}

bool contains_all(const std::vector<ParamPoly>& gens, const std::vector<ParamPoly>& probes) {
  GroebnerBasis gb = membership_basis(gens, probes);
  for (const auto& p : probes)
    if (!ideal_member(p, gb)) return false;
  return true;
}

Outcome c7() {
  for (int n : {4, 5}) {
    auto full = paper_ledger(std::vector<std::string>{"Obstr1", "CrefRelations"}, n).generators;
    if (!contains_all(full, paper_ledger("Obstr1Simplified", n).generators)) return {false, "simplified block at n=" + std::to_string(n)};
    auto c1 = paper_ledger(std::vector<std::string>{"Obstr2kappaC1", "CrefRelations"}, n).generators;
    if (!contains_all(c1, paper_ledger("Obstr2kappaC1Simplified", n).generators)) return {false, "kappaC1 block at n=" + std::to_string(n)};
    ObstructionSystem branch;
    branch.n = n;
    branch.add(sym(P::a4) - sym(P::a7), {"paperLedger", std::nullopt, {}, "a4=a7"});
    branch.add(sym(P::b4) - sym(P::b7), {"paperLedger", std::nullopt, {}, "b4=b7"});
    ObstructionSystem A = paper_ledger(std::vector<std::string>{"Obstr1", "CrefRelations"}, n);
    A.append(branch);
    ObstructionSystem B = paper_ledger(std::vector<std::string>{"Obstr1SimplifiedFinal", "CrefRelations"}, n);
    B.append(branch);
    if (!compare_systems(A, B, CompareMode::Ideal).equal) return {false, "final block at n=" + std::to_string(n)};
  }
  return {true, "n = 4, 5"};
}

Outcome c8() {
  for (int n : {4, 5}) {
    auto rep = check_properties(family_cochain("combined", n));
    if (rep.overall != Status::Pass) return {false, "n=" + std::to_string(n) + ": " + to_string(rep.overall)};
  }
  return {true, "all five properties at n = 4, 5"};
}

Outcome c9() {
  for (int n : {4, 5}) {
    auto r = std_nonexistence_check(n);
    if (!r.linear_part_forced_zero) return {false, "(i) membership fails at n=" + std::to_string(n)};
    if (!r.c_free) return {false, "(i) c forced at n=" + std::to_string(n)};
    TwoCochain k = std_refl(n);
    auto syms = k.symbols();
    if (syms != std::set<ParamSymbol>{P::aperp, P::bperp, P::c}) return {false, "(ii) unexpected parameters"};
    if (check_properties(k).overall != Status::Pass) return {false, "(ii) std-refl at n=" + std::to_string(n)};
    TwoCochain zero = k.substitute({{P::aperp, ParamPoly()}, {P::bperp, ParamPoly()}});
    TwoCochain rca = family_cochain("rca-std", n).substitute({{P::beta, ParamPoly()}});
    if (!(zero == rca)) return {false, "(iii) specialization differs from rca-std at n=" + std::to_string(n)};
    auto s1 = check_properties(zero), s2 = check_properties(rca);
    if (s1.overall != Status::Pass || s2.overall != Status::Pass) return {false, "(iii) not PBW"};
  }
  return {true, "(i) certificates, (ii) pass, (iii) equals rca-std at n = 4, 5"};
}

Outcome c10() {
  for (int n : {4, 5, 6}) {
    auto rep = check_properties(family_cochain("rca-perm", n));
    if (rep.overall != Status::Pass || !rep.system.empty()) return {false, "rca-perm at n=" + std::to_string(n)};
    auto cons = std_constraints(family_cochain("rca-perm", n));
    if (cons.size() != 1 || !compare_systems(cons, paper_ledger("RcaStd", n), CompareMode::Set).equal)
      return {false, "rca-std constraint at n=" + std::to_string(n)};
    if (check_properties(family_cochain("rca-std", n)).overall != Status::Pass) return {false, "rca-std at n=" + std::to_string(n)};
  }
  return {true, "rca-perm unconstrained; rca-std exactly alpha + (n-1)beta = 0"};
}

/// Structured points on the constraint variety plus random points.
std::vector<NumericPoint> sample_points(const std::string& fam, std::mt19937& rng, int count) {
  std::vector<NumericPoint> out;
  auto params = family_params(fam);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int i = 0; i < count; ++i) {
    NumericPoint pt;
    for (auto s : params) pt[s] = Rat(d(rng));
    if (i % 2 == 0) {
      auto set = [&](P s, const Rat& v) {
        if (params.count(s)) pt[s] = v;
      };
      if (fam == "lie" || fam == "lin1" || fam == "lie1") {
        for (int k : {1, 2, 3, 5, 6}) {
          set(a_sym(k), 0);
          set(b_sym(k), 0);
        }
        if (i % 4 == 0) {
          set(P::a7, pt[P::a4]);
          set(P::b7, pt[P::b4]);
        } else {
          set(P::a4, 0);
          set(P::a7, 0);
          set(P::b4, 0);
          set(P::b7, 0);
        }
      }
      if (fam == "refl-full") {
        if (i % 4 == 0) {
          set(P::beta, pt[P::alpha]);
          set(P::a, -pt[P::aperp]);
          set(P::b, -pt[P::bperp]);
        } else {
          set(P::alpha, 0);
          set(P::beta, 0);
        }
      }
      if (fam == "refl") {
        set(P::a, 0);
        set(P::aperp, 0);
        set(P::b, 0);
        set(P::bperp, 0);
      }
    }
    out.push_back(pt);
  }
  return out;
}

Outcome c11() {
  const int n = 4, per = 20;
  std::mt19937 rng(2024);
  std::ostringstream summary;
  bool all = true;
  for (const char* fam : {"lie", "lin1", "refl", "refl-full", "refl-tri", "combined", "rca-perm", "rca-std", "std-refl"}) {
    TwoCochain k = family_cochain(fam, n);
    ObstructionSystem sys = extract_system(k);
    int agree = 0, on = 0;
    for (const auto& pt : sample_points(fam, rng, per)) {
      bool vanish = sys.vanishes_at(pt);
      on += vanish;
      bool pbw = overlap_check(RewriteSystem{specialize(k, pt)}).pbw;
      agree += pbw == vanish;
    }
    all = all && agree == per;
    summary << fam << " " << agree << "/" << per << " (on " << on << ") ";
  }
  return {all, summary.str()};
}

struct DimCheck {
  std::string label;
  std::vector<ParamPoly> gens;
  std::set<ParamSymbol> ring;
  int stated;
};

Outcome c12(double budget_s, bool& completed, bool& krull_matches) {
  completed = true;
  krull_matches = true;
  bool literal = true;
  std::ostringstream out;
  std::vector<DimCheck> checks;
  for (int n : {4, 5}) {
    checks.push_back({"lie n=" + std::to_string(n), extract_system(family_cochain("lie", n)).generators, family_params("lie"), 8});
    checks.push_back({"refl n=" + std::to_string(n), paper_ledger("Obstr2PhiC1C2C3L2", n).generators,
                      family_params("refl-full"), 5});
  }
  for (const auto& c : checks) {
    GroebnerOptions opt;
    opt.budget = std::chrono::milliseconds(static_cast<long long>(budget_s * 1000));
    try {
      GroebnerBasis gb = buchberger(c.gens, opt);
      auto h = hilbert_dimension(gb, c.ring);
      literal = literal && h.projective_dim == c.stated;
      krull_matches = krull_matches && h.affine_dim == c.stated;
      out << c.label << ": projective " << h.projective_dim << ", affine " << h.affine_dim << ", degree " << h.degree
          << " (" << gb.generators.size() << " basis elements, " << gb.elapsed_ms / 1000.0 << " s); ";
    } catch (const BudgetExceeded&) {
      completed = false;
      literal = false;
      out << c.label << ": budget of " << budget_s << " s exceeded; ";
    }
  }
  if (completed && !literal && krull_matches)
    out << "the stated values 8 and 5 are the affine (Krull) dimensions of the parameter varieties; "
           "the projective dimensions are one less";
  return {literal, out.str()};
}

}  // namespace

int main(int argc, char** argv) {
  bool dims_only = argc > 1 && std::strcmp(argv[1], "--dimensions-only") == 0;
  double budget = 3600;
  bool completed = false, krull = false;
  auto crit12 = [&] {
    return run(12, "Groebner dimensions (conjecture check, not counted)", 0, [&] { return c12(budget, completed, krull); });
  };
  if (dims_only) {
    crit12();
    // regression on the computed values: both varieties have the conjectured affine dimension
    return completed && krull ? 0 : 1;
  }
  bool ok = true;
  ok &= run(1, "invariant 2-forms have dimension 2", 1, c1);
  ok &= run(2, "family well-formedness", 10, c2);
  ok &= run(3, "psi of linear parts vanishes", 30, c3);
  ok &= run(4, "first-obstruction identity", 120, c4);
  ok &= run(5, "second-obstruction identities", 120, c5);
  ok &= run(6, "lie family equals ledger ideal", 900, c6);
  ok &= run(7, "simplified ledger consequences", 0, c7);
  ok &= run(8, "combined family passes", 0, c8);
  ok &= run(9, "doubled standard representation", 0, c9);
  ok &= run(10, "Cherednik baselines", 0, c10);
  ok &= run(11, "rewriting oracle agreement", 600, c11);
  crit12();
  return ok ? 0 : 1;
}
