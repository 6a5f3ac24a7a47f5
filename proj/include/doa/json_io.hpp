#pragma once

#include <string>

#include <json.hpp>

#include "doa/pbw.hpp"
#include "doa/rewrite.hpp"

namespace doa {

using json = nlohmann::ordered_json;

inline std::string report_schema_version() { return "1.0"; }

struct JsonFormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline json basis_list(const std::vector<BasisIndex>& bs) {
  json a = json::array();
  for (auto b : bs) a.push_back(to_string(b));
  return a;
}

inline json to_json(const Entry& e) {
  json lin = json::object();
  for (const auto& [b, x] : e.linear.coords()) lin[to_string(b)] = to_string(x);
  return {{"linear", lin}, {"constant", to_string(e.constant)}};
}

inline json to_json(const TwoCochain& k) {
  json entries = json::array();
  for (const auto& [g, comp] : k.table)
    for (const auto& [p, e] : comp) {
      json j = {{"g", to_string(g)}, {"pair", basis_list({p.first, p.second})}};
      json v = to_json(e);
      j["linear"] = v["linear"];
      j["constant"] = v["constant"];
      entries.push_back(j);
    }
  json out = {{"schema", report_schema_version()}, {"n", k.n}, {"kind", "two"}};
  if (k.bar) out["basis"] = "bar";
  out["entries"] = entries;
  return out;
}

inline TwoCochain two_cochain_from_json(const json& j) {
  try {
    if (j.value("kind", "two") != "two") throw JsonFormatError("expected a two-cochain");
    int n = j.at("n").get<int>();
    require_n(n);
    TwoCochain k(n, j.value("basis", "") == "bar");
    for (const auto& e : j.at("entries")) {
      Perm g = parse_perm(e.at("g").get<std::string>(), n);
      const auto& pr = e.at("pair");
      if (pr.size() != 2) throw JsonFormatError("pair must have two entries");
      Vect lin;
      if (e.contains("linear"))
        for (const auto& [b, x] : e.at("linear").items()) lin.add(parse_basis(b, n), parse_poly(x.get<std::string>()));
      ParamPoly c = e.contains("constant") ? parse_poly(e.at("constant").get<std::string>()) : ParamPoly();
      k.add(g, parse_basis(pr[0].get<std::string>(), n), parse_basis(pr[1].get<std::string>(), n), lin, c);
    }
    return k;
  } catch (const json::exception& ex) {
    throw JsonFormatError(std::string("malformed cochain JSON: ") + ex.what());
  }
}

inline json to_json(const SymPoly2& s) {
  json lin = json::object(), quad = json::object();
  std::string cst = "0";
  for (const auto& [m, p] : s.terms()) {
    if (m.deg == 0) cst = to_string(p);
    if (m.deg == 1) lin[to_string(m.u)] = to_string(p);
    if (m.deg == 2) quad[to_string(m.u) + "*" + to_string(m.v)] = to_string(p);
  }
  return {{"linear", lin}, {"constant", cst}, {"quadratic", quad}};
}

inline json to_json(const ThreeCochain& t) {
  json entries = json::array();
  for (const auto& [g, comp] : t.table)
    for (const auto& [tri, v] : comp) {
      json j = {{"g", to_string(g)}, {"triple", basis_list({tri[0], tri[1], tri[2]})}};
      json val = to_json(v);
      for (auto& [key, x] : val.items()) j[key] = x;
      entries.push_back(j);
    }
  return {{"schema", report_schema_version()}, {"n", t.n}, {"kind", "three"}, {"entries", entries}};
}

inline json to_json(const Provenance& p) {
  return {{"source", p.source}, {"g", p.g ? to_string(*p.g) : ""}, {"triple", basis_list(p.triple)}, {"label", p.label}};
}

inline json to_json(const ObstructionSystem& s) {
  json gens = json::array(), prov = json::array();
  for (const auto& g : s.generators) gens.push_back(to_string(g));
  for (const auto& p : s.provenance) prov.push_back(to_json(p));
  json out = {{"schema", report_schema_version()}, {"n", s.n}, {"generators", gens}, {"provenance", prov}};
  if (s.ring) {
    json r = json::array();
    for (auto x : *s.ring) r.push_back(std::string(name(x)));
    out["ring"] = r;
  }
  return out;
}

inline std::set<ParamSymbol> parse_symbol_set(const json& a) {
  std::set<ParamSymbol> out;
  for (const auto& x : a) {
    auto s = symbol_from_name(x.get<std::string>());
    if (!s) throw JsonFormatError("unknown symbol " + x.get<std::string>());
    out.insert(*s);
  }
  return out;
}

inline ObstructionSystem system_from_json(const json& j) {
  try {
    ObstructionSystem s;
    s.n = j.at("n").get<int>();
    require_n(s.n);
    const auto& gens = j.at("generators");
    const json* prov = j.contains("provenance") ? &j.at("provenance") : nullptr;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Provenance p{"input", std::nullopt, {}, ""};
      if (prov && i < prov->size()) {
        const auto& pj = (*prov)[i];
        p.source = pj.value("source", "input");
        std::string g = pj.value("g", "");
        if (!g.empty()) p.g = parse_perm(g, s.n);
        if (pj.contains("triple"))
          for (const auto& b : pj.at("triple")) p.triple.push_back(parse_basis(b.get<std::string>(), s.n));
        p.label = pj.value("label", "");
      }
      s.add(parse_poly(gens[i].get<std::string>()), p);
    }
    if (j.contains("ring")) s.ring = parse_symbol_set(j.at("ring"));
    return s;
  } catch (const json::exception& ex) {
    throw JsonFormatError(std::string("malformed system JSON: ") + ex.what());
  }
}

inline json to_json(const Witness& w) {
  return {{"check", w.check}, {"g", to_string(w.g)}, {"tuple", basis_list(w.tuple)}, {"value", w.value}};
}

inline json to_json(const VerificationReport& r) {
  json props = json::array();
  for (const auto& p : r.properties) {
    json w = json::array();
    for (const auto& x : p.witnesses) w.push_back(to_json(x));
    json gens = json::array();
    for (const auto& g : p.residual.generators) gens.push_back(to_string(g));
    props.push_back({{"id", p.id}, {"name", p.name}, {"status", to_string(p.status)}, {"witnesses", w}, {"residual", gens}});
  }
  json out = {{"schema", report_schema_version()}, {"n", r.n}, {"status", to_string(r.overall)}, {"properties", props}};
  out["system"] = r.overall == Status::Conditional ? to_json(r.system) : json(nullptr);
  json warn = json::array();
  for (const auto& w : r.warnings) warn.push_back(w);
  out["warnings"] = warn;
  return out;
}

inline json to_json(const ComparisonReport& c) {
  json a = json::array(), b = json::array();
  for (const auto& p : c.only_in_a) a.push_back(to_string(p));
  for (const auto& p : c.only_in_b) b.push_back(to_string(p));
  return {{"schema", report_schema_version()},
          {"mode", c.mode == CompareMode::Set ? "set" : "ideal"},
          {"equal", c.equal},
          {"left_size", c.size_a},
          {"right_size", c.size_b},
          {"only_left", a},
          {"only_right", b}};
}

inline json to_json(const HilbertResult& h, const GroebnerBasis& gb) {
  json num = json::array();
  for (const auto& c : h.numerator) num.push_back(c.get_str());
  return {{"schema", report_schema_version()},
          {"affine_dim", h.affine_dim},
          {"projective_dim", h.projective_dim},
          {"degree", h.degree},
          {"ring_size", h.ring_vars},
          {"hilbert_numerator", num},
          {"basis_size", gb.generators.size()},
          {"spairs", gb.spairs},
          {"elapsed_ms", gb.elapsed_ms}};
}

inline json to_json(const OverlapReport& r) {
  json w = nullptr;
  if (!r.failures.empty()) w = {{"kind", r.failures[0].kind}, {"where", r.failures[0].where}, {"difference", r.failures[0].difference}};
  return {{"schema", report_schema_version()},
          {"pass", r.pbw},
          {"witness", w},
          {"triples_checked", r.triples_checked},
          {"group_overlaps_checked", r.group_checked},
          {"failures", r.failures.size()}};
}

inline json to_json(const NonexistenceReport& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back({{"target", to_string(c.target)}, {"member", c.member}});
  return {{"n", r.n},
          {"augmented_size", r.augmented.size()},
          {"linear_part_forced_zero", r.linear_part_forced_zero},
          {"c_free", r.c_free},
          {"memberships", certs}};
}

/// { "name", "n", "bindings": { symbol: rational-or-polytext } }
inline FamilySpec family_spec_from_json(const json& j) {
  try {
    FamilySpec s;
    s.name = j.at("name").get<std::string>();
    s.n = j.at("n").get<int>();
    if (j.contains("bindings"))
      for (const auto& [k, v] : j.at("bindings").items()) {
        auto sym = symbol_from_name(k);
        if (!sym) throw JsonFormatError("unknown symbol " + k);
        s.bindings[*sym] = v.is_number_integer() ? ParamPoly(v.get<long>()) : parse_poly(v.get<std::string>());
      }
    return s;
  } catch (const json::exception& ex) {
    throw JsonFormatError(std::string("malformed family JSON: ") + ex.what());
  }
}

/// Bindings object { symbol: rational-or-polytext }; a nested "bindings" key is also accepted.
inline Bindings bindings_from_json(const json& j0) {
  const json& j = j0.contains("bindings") ? j0.at("bindings") : j0;
  Bindings b;
  for (const auto& [k, v] : j.items()) {
    auto sym = symbol_from_name(k);
    if (!sym) throw JsonFormatError("unknown symbol " + k);
    b[*sym] = v.is_number_integer() ? ParamPoly(v.get<long>()) : parse_poly(v.get<std::string>());
  }
  return b;
}

/// Numeric point { symbol: integer | "p/q" }; a nested "point" key is also accepted.
inline NumericPoint point_from_json(const json& j0) {
  const json& j = j0.contains("point") ? j0.at("point") : j0;
  NumericPoint p;
  for (const auto& [k, v] : j.items()) {
    auto sym = symbol_from_name(k);
    if (!sym) throw JsonFormatError("unknown symbol " + k);
    p[*sym] = v.is_number_integer() ? Rat(v.get<long>()) : parse_rat(v.get<std::string>());
  }
  return p;
}

}  // namespace doa
