#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "doa/vect.hpp"

namespace doa {

/// Commutative monomial of degree <= 2 in the basis symbols; u <= v when deg = 2.
struct SymMono {
  std::uint8_t deg = 0;
  BasisIndex u{}, v{};

  static SymMono one() { return {}; }
  static SymMono lin(BasisIndex b) { return {1, b, {}}; }
  static SymMono quad(BasisIndex p, BasisIndex q) {
    if (q < p) std::swap(p, q);
    return {2, p, q};
  }
  friend auto operator<=>(const SymMono&, const SymMono&) = default;
};

inline std::string to_string(const SymMono& m) {
  if (m.deg == 0) return "1";
  if (m.deg == 1) return to_string(m.u);
  return to_string(m.u) + "*" + to_string(m.v);
}

struct DegreeError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Degree <= 2 polynomial in basis symbols with ParamPoly coefficients.
class SymPoly2 {
 public:
  SymPoly2() = default;
  static SymPoly2 constant(const ParamPoly& p) {
    SymPoly2 s;
    s.add(SymMono::one(), p);
    return s;
  }
  static SymPoly2 linear(const Vect& v) {
    SymPoly2 s;
    for (const auto& [b, x] : v.coords()) s.add(SymMono::lin(b), x);
    return s;
  }

  const std::map<SymMono, ParamPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const {
    int d = -1;
    for (const auto& [m, _] : t_) d = std::max<int>(d, m.deg);
    return d;
  }

  void add(const SymMono& m, const ParamPoly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(m, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  SymPoly2& operator+=(const SymPoly2& o) {
    for (const auto& [m, p] : o.t_) add(m, p);
    return *this;
  }
  SymPoly2& operator-=(const SymPoly2& o) {
    for (const auto& [m, p] : o.t_) add(m, -p);
    return *this;
  }
  friend SymPoly2 operator+(SymPoly2 a, const SymPoly2& b) { return a += b; }
  friend SymPoly2 operator-(SymPoly2 a, const SymPoly2& b) { return a -= b; }
  SymPoly2 operator-() const {
    SymPoly2 r;
    for (const auto& [m, p] : t_) r.t_.emplace(m, -p);
    return r;
  }
  friend SymPoly2 operator*(const ParamPoly& s, const SymPoly2& a) {
    SymPoly2 r;
    if (s.is_zero()) return r;
    for (const auto& [m, p] : a.t_) r.add(m, p * s);
    return r;
  }
  friend bool operator==(const SymPoly2& a, const SymPoly2& b) { return a.t_ == b.t_; }

  /// Linear part as a vector (degree-1 terms only).
  Vect linear_part() const {
    Vect v;
    for (const auto& [m, p] : t_)
      if (m.deg == 1) v.add(m.u, p);
    return v;
  }
  ParamPoly constant_part() const {
    auto it = t_.find(SymMono::one());
    return it == t_.end() ? ParamPoly() : it->second;
  }

  SymPoly2 substitute(const Bindings& subs) const {
    SymPoly2 r;
    for (const auto& [m, p] : t_) r.add(m, p.substitute(subs));
    return r;
  }

 private:
  std::map<SymMono, ParamPoly> t_;
};

inline SymPoly2 sym_mul(const SymPoly2& s, const SymPoly2& t) {
  SymPoly2 r;
  for (const auto& [m1, p1] : s.terms())
    for (const auto& [m2, p2] : t.terms()) {
      if (m1.deg + m2.deg > 2) throw DegreeError("sym_mul: product exceeds degree 2");
      SymMono m;
      if (m1.deg == 0) {
        m = m2;
      } else if (m2.deg == 0) {
        m = m1;
      } else {
        m = SymMono::quad(m1.u, m2.u);
      }
      r.add(m, p1 * p2);
    }
  return r;
}

inline SymPoly2 act(const Perm& h, const SymPoly2& s) {
  SymPoly2 r;
  for (const auto& [m, p] : s.terms()) {
    SymMono mm = m;
    if (m.deg >= 1) mm.u = act(h, m.u);
    if (m.deg == 2) mm = SymMono::quad(mm.u, act(h, m.v));
    r.add(mm, p);
  }
  return r;
}

inline std::string to_string(const SymPoly2& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(it->second) + ")";
    if (it->first.deg) out += "*" + to_string(it->first);
  }
  return out;
}

/// Element of S(V) ⊗ CG with components of degree <= 2.
class GAElt {
 public:
  const std::map<Perm, SymPoly2>& components() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  SymPoly2 at(const Perm& g) const {
    auto it = c_.find(g);
    return it == c_.end() ? SymPoly2() : it->second;
  }
  void add(const Perm& g, const SymPoly2& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = c_.try_emplace(g, s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  GAElt& operator+=(const GAElt& o) {
    for (const auto& [g, s] : o.c_) add(g, s);
    return *this;
  }
  GAElt& operator-=(const GAElt& o) {
    for (const auto& [g, s] : o.c_) add(g, -s);
    return *this;
  }
  friend GAElt operator+(GAElt a, const GAElt& b) { return a += b; }
  friend GAElt operator-(GAElt a, const GAElt& b) { return a -= b; }
  friend bool operator==(const GAElt& a, const GAElt& b) { return a.c_ == b.c_; }

 private:
  std::map<Perm, SymPoly2> c_;
};

/// h·(s ⊗ g) = (h·s) ⊗ h g h^{-1}
inline GAElt ga_act(const Perm& h, const GAElt& e) {
  GAElt r;
  for (const auto& [g, s] : e.components()) r.add(conjugate(h, g), act(h, s));
  return r;
}

inline std::string to_string(const GAElt& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [g, s] : e.components()) {
    if (!out.empty()) out += " + ";
    out += "[" + to_string(s) + "]" + to_string(g);
  }
  return out;
}

}  // namespace doa
