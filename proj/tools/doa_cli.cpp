#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "doa/doa.hpp"

using namespace doa;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw JsonFormatError(path + ": " + e.what());
  }
}

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << j.dump(2) << "\n";
}

FamilySpec make_spec(const std::string& family, int n, const std::string& bindings_file) {
  FamilySpec s{family, n, {}};
  if (!bindings_file.empty()) s.bindings = bindings_from_json(read_json(bindings_file));
  validate(s);
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

/// FILE, ledger:NAME[,NAME...], or extract:FAMILY (the latter two need n).
ObstructionSystem load_system(const std::string& src, std::optional<int> n, int jobs) {
  if (src.rfind("ledger:", 0) == 0) {
    if (!n) throw UsageError(src + " needs --n or a file on the other side");
    return paper_ledger(split(src.substr(7), ','), *n);
  }
  if (src.rfind("extract:", 0) == 0) {
    if (!n) throw UsageError(src + " needs --n or a file on the other side");
    return extract_system(build_presentation({src.substr(8), *n, {}}), jobs);
  }
  return system_from_json(read_json(src));
}

bool is_file_source(const std::string& s) { return s.rfind("ledger:", 0) != 0 && s.rfind("extract:", 0) != 0; }

/// Short self-check of the library's structural invariants at one n.
json run_invariants(int n, int jobs, bool& ok) {
  json checks = json::array();
  auto record = [&](const std::string& name, bool pass, const std::string& detail = "") {
    ok = ok && pass;
    checks.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
  };
  if (n <= 8) record("invariant-two-forms", invariant_two_form_dim(n) == 2, std::to_string(invariant_two_form_dim(n)));
  for (const auto& fam : family_names()) {
    TwoCochain k = family_cochain(fam, n);
    bool inv = check_invariance(k).invariant, img = check_image(k).image_ok, cod = check_support_codim(k).codim_ok;
    record("well-formed:" + fam, inv && img && cod);
  }
  record("tri-modes-agree", kappa_tri(n, TriMode::Formula) == kappa_tri(n, TriMode::Matrix));
  record("psi-kappa1L-zero", psi(kappa1_linear(n), jobs).is_zero());
  record("psi-reflL-zero", psi(kappa_refl_linear(n), jobs).is_zero());
  record("std-refl-bar-relation", bar_consistency_residual(std_refl(n)).empty());
  for (const char* fam : {"refl-tri", "rca-perm", "std-refl", "rca-std", "combined"}) {
    auto rep = check_properties(family_cochain(fam, n), jobs);
    record(std::string("passes:") + fam, rep.overall == Status::Pass, to_string(rep.overall));
  }
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic PBW checks for deformations of S(V)#S_n"};
  app.require_subcommand(1);
  int jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads (default: DOA_JOBS or 1)")->check(CLI::PositiveNumber);

  std::string family, bindings, out, point_file, left, right, mode = "ideal", in_file;
  int n = 4;
  std::optional<int> n_opt;
  bool dimension = false, degree = false;
  double budget = 3600;

  auto* verify = app.add_subcommand("verify", "check the five PBW properties for a family");
  verify->add_option("--family", family)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--bindings", bindings);
  verify->add_option("--out", out);

  auto* extract = app.add_subcommand("extract", "extract the obstruction system of a family");
  extract->add_option("--family", family)->required();
  extract->add_option("--n", n)->required();
  extract->add_option("--bindings", bindings);
  extract->add_option("--out", out);

  auto* compare = app.add_subcommand("compare", "compare two systems as sets or ideals");
  compare->add_option("--left", left)->required();
  compare->add_option("--right", right)->required();
  compare->add_option("--mode", mode)->check(CLI::IsMember({"set", "ideal"}));
  compare->add_option("--n", n_opt);
  compare->add_option("--out", out);

  auto* groebner = app.add_subcommand("groebner", "Groebner basis, dimension and degree of a system");
  groebner->add_option("--in", in_file)->required();
  groebner->add_flag("--dimension", dimension);
  groebner->add_flag("--degree", degree);
  groebner->add_option("--budget", budget, "seconds");
  groebner->add_option("--out", out);

  auto* oracle = app.add_subcommand("oracle", "rewriting overlap check at a numeric point");
  oracle->add_option("--family", family)->required();
  oracle->add_option("--n", n)->required();
  oracle->add_option("--point", point_file)->required();
  oracle->add_option("--bindings", bindings);
  oracle->add_option("--out", out);

  auto* invariants = app.add_subcommand("invariants", "run the structural property suite");
  invariants->add_option("--n", n)->required();
  invariants->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      if (family == "std-lie") {
        require_n(n);
        auto rep = check_properties(family_cochain("lie", n), jobs);
        json j = to_json(rep);
        j["family"] = family;
        j["certificate"] = to_json(std_nonexistence_check(n, jobs));
        j["status"] = "fail";
        emit(j, out);
        return 1;
      }
      FamilySpec spec = make_spec(family, n, bindings);
      auto rep = check_properties(build_presentation(spec), jobs);
      json j = to_json(rep);
      j["family"] = family;
      emit(j, out);
      return rep.overall == Status::Pass ? 0 : 1;
    }
    if (*extract) {
      FamilySpec spec = make_spec(family == "std-lie" ? "lie" : family, n, bindings);
      ObstructionSystem s = extract_system(build_presentation(spec), jobs);
      s.ring = family_params(spec.name);
      emit(to_json(s), out);
      return s.empty() ? 0 : 1;
    }
    if (*compare) {
      std::optional<ObstructionSystem> L, R;
      if (is_file_source(left)) L = load_system(left, n_opt, jobs);
      if (is_file_source(right)) R = load_system(right, n_opt, jobs);
      std::optional<int> nn = n_opt;
      if (!nn && L) nn = L->n;
      if (!nn && R) nn = R->n;
      if (!L) L = load_system(left, nn, jobs);
      if (!R) R = load_system(right, nn, jobs);
      auto c = compare_systems(*L, *R, mode == "set" ? CompareMode::Set : CompareMode::Ideal);
      emit(to_json(c), out);
      return c.equal ? 0 : 1;
    }
    if (*groebner) {
      ObstructionSystem s = system_from_json(read_json(in_file));
      GroebnerOptions opt;
      opt.budget = std::chrono::milliseconds(static_cast<long long>(budget * 1000));
      json j;
      try {
        GroebnerBasis gb = buchberger(s.generators, opt);
        if (dimension || degree) {
          std::set<ParamSymbol> ring = s.ring ? *s.ring : s.symbols();
          j = to_json(hilbert_dimension(gb, ring), gb);
        } else {
          j = {{"schema", report_schema_version()}, {"basis_size", gb.generators.size()}, {"spairs", gb.spairs},
               {"elapsed_ms", gb.elapsed_ms}};
        }
        json basis = json::array();
        for (const auto& g : gb.generators) basis.push_back(to_string(g));
        j["basis"] = basis;
        j["status"] = "complete";
      } catch (const BudgetExceeded&) {
        j = {{"schema", report_schema_version()}, {"status", "budget-exceeded"}, {"budget_seconds", budget}};
        emit(j, out);
        return 1;
      }
      emit(j, out);
      return 0;
    }
    if (*oracle) {
      FamilySpec spec = make_spec(family, n, bindings);
      TwoCochain k = build_presentation(spec);
      NumericPoint pt = point_from_json(read_json(point_file));
      TwoCochain ks = specialize(k, pt);
      auto rep = overlap_check(RewriteSystem(ks), jobs);
      json j = to_json(rep);
      j["family"] = family;
      j["system_vanishes"] = extract_system(k, jobs).vanishes_at(pt);
      emit(j, out);
      return rep.pbw ? 0 : 1;
    }
    if (*invariants) {
      require_n(n);
      bool ok = true;
      json checks = run_invariants(n, jobs, ok);
      emit({{"schema", report_schema_version()}, {"n", n}, {"pass", ok}, {"checks", checks}}, out);
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
