#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doa/cochain.hpp"

namespace doa {

struct NotNumericError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Word = std::vector<std::uint8_t>;
/// Σ coef · letter
using LetterComb = std::vector<std::pair<int, Rat>>;

/// Letters of the generating space with the group action. On V the letters are
/// x1..xn, y1..yn; on h*⊕h they are x̄1..x̄(n-1), ȳ1..ȳ(n-1) with x̄n = −Σ x̄i.
class LetterSpace {
 public:
  LetterSpace(int n, bool bar) : n_(n), bar_(bar), per_block_(bar ? n - 1 : n) {
    require_n(n);
    for (const auto& g : all_perms(n)) {
      std::vector<LetterComb> rows(dim());
      for (int l = 0; l < dim(); ++l) rows[l] = act_letter(g, l);
      action_.emplace(g, std::move(rows));
    }
  }
  int n() const { return n_; }
  bool bar() const { return bar_; }
  int dim() const { return 2 * per_block_; }

  std::string name(int l) const {
    std::string s = l < per_block_ ? "x" : "y";
    if (bar_) s += "bar";
    return s + std::to_string(l % per_block_ + 1);
  }
  /// The basis vector of V (or bar spanning vector) behind a letter.
  BasisIndex basis_of(int l) const {
    return {l < per_block_ ? Kind::X : Kind::Y, static_cast<std::uint8_t>(l % per_block_ + 1)};
  }
  const LetterComb& act(const Perm& g, int l) const { return action_.at(g)[l]; }

  /// Converts a vector of V (zero block sums required on h*⊕h) to letters.
  LetterComb from_vect(const Vect& v) const {
    LetterComb out;
    if (!bar_) {
      for (const auto& [b, x] : v.coords()) out.emplace_back(b.pos(n_), numeric(x));
      return out;
    }
    for (Kind k : {Kind::X, Kind::Y}) {
      Rat last = numeric(v.coef({k, static_cast<std::uint8_t>(n_)})), sum = 0;
      for (int i = 1; i <= n_; ++i) sum += numeric(v.coef({k, static_cast<std::uint8_t>(i)}));
      if (sum != 0) throw std::invalid_argument("vector outside h*+h: " + to_string(v));
      for (int i = 1; i < n_; ++i) {
        Rat c = numeric(v.coef({k, static_cast<std::uint8_t>(i)})) - last;
        if (c != 0) out.emplace_back((k == Kind::X ? 0 : per_block_) + i - 1, c);
      }
    }
    return out;
  }

  static Rat numeric(const ParamPoly& p) {
    if (!p.is_constant()) throw NotNumericError("rewrite oracle needs a numeric cochain, got " + to_string(p));
    return p.constant_value();
  }

 private:
  int n_;
  bool bar_;
  int per_block_;
  std::map<Perm, std::vector<LetterComb>> action_;

  LetterComb act_letter(const Perm& g, int l) const {
    int block = l < per_block_ ? 0 : per_block_;
    int i = l % per_block_ + 1, j = g(i);
    if (!bar_ || j < n_) return {{block + j - 1, Rat(1)}};
    LetterComb out;
    for (int k = 1; k < n_; ++k) out.emplace_back(block + k - 1, Rat(-1));
    return out;
  }
};

struct NCKey {
  Word w;
  Perm g;
  friend bool operator<(const NCKey& a, const NCKey& b) {
    if (a.w.size() != b.w.size()) return a.w.size() > b.w.size();  // longest first
    if (a.w != b.w) return a.w < b.w;
    return a.g < b.g;
  }
  friend bool operator==(const NCKey&, const NCKey&) = default;
};

/// Finite sum Σ c · w · g in T(U)#G, group element kept on the right.
class NCElement {
 public:
  NCElement() = default;
  static NCElement term(Word w, const Perm& g, const Rat& c = Rat(1)) {
    NCElement e;
    e.add({std::move(w), g}, c);
    return e;
  }
  const std::map<NCKey, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const NCKey& k, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  NCElement& operator+=(const NCElement& o) {
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
  }
  NCElement& operator-=(const NCElement& o) {
    for (const auto& [k, c] : o.t_) add(k, -c);
    return *this;
  }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend bool operator==(const NCElement& a, const NCElement& b) { return a.t_ == b.t_; }

 private:
  std::map<NCKey, Rat> t_;
};

/// κ(a, b) for letters a > b, as Σ_g (letters + constant) g.
struct KappaValue {
  std::vector<std::pair<Perm, std::pair<LetterComb, Rat>>> parts;
};

/// Rules a·b → b·a + κ(a, b) for letters a > b, plus g·u → (g·u)·g.
class RewriteSystem {
 public:
  RewriteSystem(const TwoCochain& k) : space_(k.n, k.bar), n_(k.n) {  // NOLINT
    int d = space_.dim();
    rules_.resize(d * d);
    for (const auto& [g, comp] : k.table) {
      (void)comp;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < a; ++b) {
          Entry e = k.get(g, space_.basis_of(a), space_.basis_of(b));
          if (e.is_zero()) continue;
          LetterComb lin = space_.from_vect(e.linear);
          Rat c = LetterSpace::numeric(e.constant);
          rules_[a * d + b].parts.push_back({g, {std::move(lin), c}});
        }
    }
  }
  const LetterSpace& space() const { return space_; }
  int n() const { return n_; }
  const KappaValue& kappa(int a, int b) const { return rules_[a * space_.dim() + b]; }

 private:
  LetterSpace space_;
  int n_;
  std::vector<KappaValue> rules_;
};

namespace detail {

/// Σ c · w₁ · (g·w₂) · g h, expanding the linear combinations letter by letter.
inline void push_moved(NCElement& out, const LetterSpace& sp, const Word& prefix, const LetterComb& mid, const Perm& g,
                       const Word& suffix, const Perm& tail, const Rat& c) {
  std::vector<std::pair<Word, Rat>> acc;
  for (const auto& [l, x] : mid) {
    Word w = prefix;
    w.push_back(static_cast<std::uint8_t>(l));
    acc.emplace_back(std::move(w), c * x);
  }
  if (mid.empty()) acc.emplace_back(prefix, c);
  for (auto letter : suffix) {
    std::vector<std::pair<Word, Rat>> next;
    for (const auto& [w, x] : acc)
      for (const auto& [l, y] : sp.act(g, letter)) {
        Word w2 = w;
        w2.push_back(static_cast<std::uint8_t>(l));
        next.emplace_back(std::move(w2), x * y);
      }
    acc = std::move(next);
  }
  Perm gh = compose(g, tail);
  for (auto& [w, x] : acc) out.add({std::move(w), gh}, x);
}

}  // namespace detail

/// Normal form: every word non-decreasing in the letter order.
inline NCElement normal_form_nc(const NCElement& e, const RewriteSystem& rs) {
  const auto& sp = rs.space();
  NCElement work = e, out;
  while (!work.is_zero()) {
    auto it = work.terms().begin();
    NCKey key = it->first;
    Rat c = it->second;
    work.add(key, -c);
    const Word& w = key.w;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      out.add(key, c);
      continue;
    }
    int a = w[i], b = w[i + 1];
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    work.add({swapped, key.g}, c);
    Word prefix(w.begin(), w.begin() + static_cast<long>(i)), suffix(w.begin() + static_cast<long>(i) + 2, w.end());
    for (const auto& [g, val] : rs.kappa(a, b).parts) {
      const auto& [lin, cst] = val;
      if (!lin.empty()) detail::push_moved(work, sp, prefix, lin, g, suffix, key.g, c);
      if (cst != 0) detail::push_moved(work, sp, prefix, {}, g, suffix, key.g, c * cst);
    }
  }
  return out;
}

struct OverlapFailure {
  std::string kind;  // "triple" or "group"
  std::string where;
  std::string difference;
};

struct OverlapReport {
  bool pbw = true;
  std::size_t triples_checked = 0, group_checked = 0;
  std::vector<OverlapFailure> failures;  // first few
};

inline std::string to_string(const NCElement& e, const LetterSpace& sp) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    for (auto l : k.w) s += "*" + sp.name(l);
    if (!k.g.is_identity()) s += "*" + to_string(k.g);
  }
  return s;
}

/// Diamond-lemma check in degree three: every letter triple a > b > c resolves
/// uniquely, and the relations are stable under the group (g · ab for all g).
inline OverlapReport overlap_check(const RewriteSystem& rs, int jobs = default_jobs(), std::size_t keep = 5) {
  const auto& sp = rs.space();
  const int d = sp.dim();
  Perm id(rs.n());
  OverlapReport rep;

  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < a; ++b)
      for (int c = 0; c < b; ++c) triples.push_back({a, b, c});
  std::vector<NCElement> tdiff(triples.size());
  parallel_for(triples.size(), jobs, [&](std::size_t i) {
    auto [a, b, c] = triples[i];
    auto W = [&](std::initializer_list<int> ls) {
      Word w;
      for (int l : ls) w.push_back(static_cast<std::uint8_t>(l));
      return w;
    };
    // (ab)c: rewrite ab first
    NCElement left = NCElement::term(W({b, a, c}), id);
    for (const auto& [g, val] : rs.kappa(a, b).parts) {
      if (!val.first.empty()) detail::push_moved(left, sp, {}, val.first, g, W({c}), id, Rat(1));
      if (val.second != 0) detail::push_moved(left, sp, {}, {}, g, W({c}), id, val.second);
    }
    // a(bc): rewrite bc first
    NCElement right = NCElement::term(W({a, c, b}), id);
    for (const auto& [g, val] : rs.kappa(b, c).parts) {
      if (!val.first.empty()) detail::push_moved(right, sp, W({a}), val.first, g, {}, id, Rat(1));
      if (val.second != 0) detail::push_moved(right, sp, W({a}), {}, g, {}, id, val.second);
    }
    tdiff[i] = normal_form_nc(left, rs) - normal_form_nc(right, rs);
  });
  rep.triples_checked = triples.size();
  for (std::size_t i = 0; i < triples.size(); ++i)
    if (!tdiff[i].is_zero()) {
      rep.pbw = false;
      if (rep.failures.size() < keep) {
        auto [a, b, c] = triples[i];
        rep.failures.push_back({"triple", sp.name(a) + sp.name(b) + sp.name(c), to_string(tdiff[i], sp)});
      }
    }

  // g·(ab): (g·a)(g·b) g  versus  g·(ba + κ(a,b)) straightened
  std::vector<std::tuple<Perm, int, int>> gcases;
  for (const auto& g : all_perms(rs.n()))
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < a; ++b) gcases.emplace_back(g, a, b);
  std::vector<NCElement> gdiff(gcases.size());
  parallel_for(gcases.size(), jobs, [&](std::size_t i) {
    const auto& [g, a, b] = gcases[i];
    NCElement left, right;
    Word ab{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
    Word ba{static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(a)};
    detail::push_moved(left, sp, {}, {}, g, ab, id, Rat(1));
    detail::push_moved(right, sp, {}, {}, g, ba, id, Rat(1));
    for (const auto& [h, val] : rs.kappa(a, b).parts) {
      // g · (κ_h lin) h = (g·lin) g h
      LetterComb moved;
      for (const auto& [l, x] : val.first)
        for (const auto& [l2, y] : sp.act(g, l)) moved.emplace_back(l2, x * y);
      if (!moved.empty()) detail::push_moved(right, sp, {}, moved, id, {}, compose(g, h), Rat(1));
      if (val.second != 0) right.add({{}, compose(g, h)}, val.second);
    }
    gdiff[i] = normal_form_nc(left, rs) - normal_form_nc(right, rs);
  });
  rep.group_checked = gcases.size();
  for (std::size_t i = 0; i < gcases.size(); ++i)
    if (!gdiff[i].is_zero()) {
      rep.pbw = false;
      if (rep.failures.size() < keep) {
        const auto& [g, a, b] = gcases[i];
        rep.failures.push_back({"group", to_string(g) + "·" + sp.name(a) + sp.name(b), to_string(gdiff[i], sp)});
      }
    }
  return rep;
}

/// Normal words of length <= max_len times group elements (sanity oracle).
inline std::size_t count_normal_words(int dim, int max_len, int group_order) {
  // non-decreasing words of length k over dim letters: C(dim + k - 1, k)
  std::size_t total = 0;
  for (int k = 0; k <= max_len; ++k) {
    std::size_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::size_t>(dim + i - 1) / static_cast<std::size_t>(i);
    total += c;
  }
  return total * static_cast<std::size_t>(group_order);
}

}  // namespace doa
