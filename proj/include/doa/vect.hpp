#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doa/param_poly.hpp"
#include "doa/perm.hpp"

namespace doa {

enum class Kind : std::uint8_t { X, Y };

/// x_i (dual block) or y_i; all X sort before all Y.
struct BasisIndex {
  Kind kind = Kind::X;
  std::uint8_t index = 1;  // 1-based

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;

  /// 0..2n-1 in the fixed basis order.
  int pos(int n) const { return (kind == Kind::X ? 0 : n) + index - 1; }
  static BasisIndex from_pos(int p, int n) {
    return p < n ? BasisIndex{Kind::X, static_cast<std::uint8_t>(p + 1)}
                 : BasisIndex{Kind::Y, static_cast<std::uint8_t>(p - n + 1)};
  }
  /// v* : x_i <-> y_i
  BasisIndex dual() const { return {kind == Kind::X ? Kind::Y : Kind::X, index}; }
};

inline BasisIndex X(int i) { return {Kind::X, static_cast<std::uint8_t>(i)}; }
inline BasisIndex Y(int i) { return {Kind::Y, static_cast<std::uint8_t>(i)}; }

inline BasisIndex act(const Perm& g, BasisIndex b) {
  return {b.kind, static_cast<std::uint8_t>(g(b.index))};
}

inline std::string to_string(BasisIndex b) {
  return std::string(b.kind == Kind::X ? "x" : "y") + std::to_string(b.index);
}

inline BasisIndex parse_basis(std::string_view s, int n) {
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y')) throw std::invalid_argument("bad basis name " + std::string(s));
  int i = std::stoi(std::string(s.substr(1)));
  if (i < 1 || i > n) throw std::invalid_argument("basis index out of range: " + std::string(s));
  return {s[0] == 'x' ? Kind::X : Kind::Y, static_cast<std::uint8_t>(i)};
}

inline std::vector<BasisIndex> basis(int n) {
  std::vector<BasisIndex> out;
  for (int i = 1; i <= n; ++i) out.push_back(X(i));
  for (int i = 1; i <= n; ++i) out.push_back(Y(i));
  return out;
}

/// Sparse vector of V with parameter-polynomial coordinates; zeros never stored.
class Vect {
 public:
  Vect() = default;
  Vect(BasisIndex b) { c_.emplace(b, ParamPoly(1)); }  // NOLINT
  Vect(BasisIndex b, ParamPoly coef) {
    if (!coef.is_zero()) c_.emplace(b, std::move(coef));
  }

  const std::map<BasisIndex, ParamPoly>& coords() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  ParamPoly coef(BasisIndex b) const {
    auto it = c_.find(b);
    return it == c_.end() ? ParamPoly() : it->second;
  }

  void add(BasisIndex b, const ParamPoly& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = c_.try_emplace(b, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  void add_scaled(const Vect& v, const ParamPoly& s) {
    if (s.is_zero()) return;
    for (const auto& [b, x] : v.c_) add(b, x * s);
  }
  void add_scaled(const Vect& v, const Rat& s) {
    if (::doa::is_zero(s)) return;
    for (const auto& [b, x] : v.c_) add(b, x * s);
  }

  Vect& operator+=(const Vect& v) {
    for (const auto& [b, x] : v.c_) add(b, x);
    return *this;
  }
  Vect& operator-=(const Vect& v) {
    for (const auto& [b, x] : v.c_) add(b, -x);
    return *this;
  }
  friend Vect operator+(Vect u, const Vect& v) { return u += v; }
  friend Vect operator-(Vect u, const Vect& v) { return u -= v; }
  Vect operator-() const {
    Vect r;
    for (const auto& [b, x] : c_) r.c_.emplace(b, -x);
    return r;
  }
  friend Vect operator*(const ParamPoly& s, const Vect& v) {
    Vect r;
    r.add_scaled(v, s);
    return r;
  }
  friend Vect operator*(const Rat& s, const Vect& v) {
    Vect r;
    r.add_scaled(v, s);
    return r;
  }
  friend bool operator==(const Vect& u, const Vect& v) { return u.c_ == v.c_; }

  Vect substitute(const Bindings& subs) const {
    Vect r;
    for (const auto& [b, x] : c_) r.add(b, x.substitute(subs));
    return r;
  }

 private:
  std::map<BasisIndex, ParamPoly> c_;
};

inline std::string to_string(const Vect& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [b, x] : v.coords()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(x) + ")*" + to_string(b);
  }
  return s;
}

inline Vect act(const Perm& g, const Vect& v) {
  Vect r;
  for (const auto& [b, x] : v.coords()) r.add(act(g, b), x);
  return r;
}

/// v_I = sum of v_i over I, in the given block.
inline Vect block_sum(Kind k, const std::vector<int>& idx) {
  Vect r;
  for (int i : idx) r.add({k, static_cast<std::uint8_t>(i)}, ParamPoly(1));
  return r;
}

/// v_[n]
inline Vect full_sum(Kind k, int n) {
  Vect r;
  for (int i = 1; i <= n; ++i) r.add({k, static_cast<std::uint8_t>(i)}, ParamPoly(1));
  return r;
}

/// v_[n] - v_I
inline Vect complement_sum(Kind k, const std::vector<int>& idx, int n) {
  Vect r = full_sum(k, n);
  r -= block_sum(k, idx);
  return r;
}

/// x̄_i = x_i - (1/n) x_[n], likewise ȳ_i.
inline Vect bar(BasisIndex b, int n) {
  Vect r(b);
  r.add_scaled(full_sum(b.kind, n), frac(-1, n));
  return r;
}

struct FixedSpace {
  Perm group_elt;
  std::vector<Vect> basis;
  int codim = 0;
};

/// Cycle-sum basis of V^g.
inline FixedSpace fixed_space(const Perm& g) {
  FixedSpace fs{g, {}, 0};
  auto cs = cycles(g);
  for (Kind k : {Kind::X, Kind::Y})
    for (const auto& c : cs) fs.basis.push_back(block_sum(k, c));
  fs.codim = 2 * g.n() - static_cast<int>(fs.basis.size());
  return fs;
}

inline int fixed_codim(const Perm& g) { return 2 * g.n() - 2 * static_cast<int>(cycles(g).size()); }

/// v lies in V^g iff its coordinates are constant along each cycle in each block.
/// Returns the coordinate differences that must vanish; empty means v ∈ V^g.
inline std::vector<ParamPoly> fixed_space_residual(const Perm& g, const Vect& v) {
  std::vector<ParamPoly> out;
  for (Kind k : {Kind::X, Kind::Y})
    for (const auto& c : cycles(g)) {
      if (c.size() < 2) continue;
      ParamPoly head = v.coef({k, static_cast<std::uint8_t>(c[0])});
      for (std::size_t t = 1; t < c.size(); ++t) {
        ParamPoly d = v.coef({k, static_cast<std::uint8_t>(c[t])}) - head;
        if (!d.is_zero()) out.push_back(std::move(d));
      }
    }
  return out;
}

/// v = std_part + triv_part with std_part of zero block sums and triv_part in span{x_[n], y_[n]}.
inline std::pair<Vect, Vect> to_bar_coords(const Vect& v, int n) {
  ParamPoly sx, sy;
  for (const auto& [b, x] : v.coords()) (b.kind == Kind::X ? sx : sy) += x;
  Vect triv;
  triv.add_scaled(full_sum(Kind::X, n), sx * frac(1, n));
  triv.add_scaled(full_sum(Kind::Y, n), sy * frac(1, n));
  return {v - triv, triv};
}

/// Dimension of (Λ²V*)^{S_n} by averaging the character of Λ²V.
inline long invariant_two_form_dim(int n) {
  require_n(n);
  if (n > 10) throw DomainError("invariant_two_form_dim: n too large for exhaustive averaging");
  mpz_class total = 0;
  for (const auto& g : all_perms(n)) {
    long fix = 0, fix2 = 0;
    Perm g2 = compose(g, g);
    for (int i = 1; i <= n; ++i) {
      fix += g(i) == i;
      fix2 += g2(i) == i;
    }
    long chi = 2 * fix, chi2 = 2 * fix2;
    total += (chi * chi - chi2) / 2;
  }
  mpz_class order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  if (total % order != 0) throw std::logic_error("character average is not an integer");
  mpz_class q = total / order;
  return q.get_si();
}

}  // namespace doa
