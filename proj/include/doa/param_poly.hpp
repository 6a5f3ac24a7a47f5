#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doa/rational.hpp"

namespace doa {

/// The closed parameter alphabet, in the fixed global order.
enum class ParamSymbol : std::uint8_t {
  a1, a2, a3, a4, a5, a6, a7,
  b1, b2, b3, b4, b5, b6, b7,
  alpha, beta, c,
  a, aperp, b, bperp
};

inline constexpr int kNumSymbols = 21;

inline constexpr std::array<std::string_view, kNumSymbols> kSymbolNames = {
    "a1", "a2", "a3", "a4", "a5", "a6", "a7",
    "b1", "b2", "b3", "b4", "b5", "b6", "b7",
    "alpha", "beta", "c",
    "a", "aperp", "b", "bperp"};

inline std::string_view name(ParamSymbol s) { return kSymbolNames[static_cast<int>(s)]; }

inline std::optional<ParamSymbol> symbol_from_name(std::string_view s) {
  for (int i = 0; i < kNumSymbols; ++i)
    if (kSymbolNames[i] == s) return static_cast<ParamSymbol>(i);
  return std::nullopt;
}

inline ParamSymbol a_sym(int i) { return static_cast<ParamSymbol>(static_cast<int>(ParamSymbol::a1) + i - 1); }
inline ParamSymbol b_sym(int i) { return static_cast<ParamSymbol>(static_cast<int>(ParamSymbol::b1) + i - 1); }

struct UnboundSymbolError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Monomial {
  std::array<std::uint8_t, kNumSymbols> e{};
  std::uint8_t deg = 0;

  static Monomial var(ParamSymbol s, int power = 1) {
    Monomial m;
    m.e[static_cast<int>(s)] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint8_t>(power);
    return m;
  }
  bool is_one() const { return deg == 0; }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial m;
    for (int i = 0; i < kNumSymbols; ++i) m.e[i] = static_cast<std::uint8_t>(x.e[i] + y.e[i]);
    m.deg = static_cast<std::uint8_t>(x.deg + y.deg);
    return m;
  }
  bool divides(const Monomial& y) const {
    if (deg > y.deg) return false;
    for (int i = 0; i < kNumSymbols; ++i)
      if (e[i] > y.e[i]) return false;
    return true;
  }
  /// y / this, assuming divides(y).
  Monomial quotient_of(const Monomial& y) const {
    Monomial m;
    for (int i = 0; i < kNumSymbols; ++i) m.e[i] = static_cast<std::uint8_t>(y.e[i] - e[i]);
    m.deg = static_cast<std::uint8_t>(y.deg - deg);
    return m;
  }
  static Monomial lcm(const Monomial& x, const Monomial& y) {
    Monomial m;
    int d = 0;
    for (int i = 0; i < kNumSymbols; ++i) {
      m.e[i] = std::max(x.e[i], y.e[i]);
      d += m.e[i];
    }
    m.deg = static_cast<std::uint8_t>(d);
    return m;
  }
  bool coprime(const Monomial& y) const {
    for (int i = 0; i < kNumSymbols; ++i)
      if (e[i] && y.e[i]) return false;
    return true;
  }
};

/// Graded reverse lexicographic comparison; a1 is the largest variable.
/// Returns >0 when x > y.
inline int grevlex_cmp(const Monomial& x, const Monomial& y) {
  if (x.deg != y.deg) return x.deg > y.deg ? 1 : -1;
  for (int i = kNumSymbols - 1; i >= 0; --i)
    if (x.e[i] != y.e[i]) return x.e[i] < y.e[i] ? 1 : -1;
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Monomial& x, const Monomial& y) const { return grevlex_cmp(x, y) > 0; }
};

inline std::string to_string(const Monomial& m) {
  std::string s;
  for (int i = 0; i < kNumSymbols; ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += '*';
    s += kSymbolNames[i];
    if (m.e[i] > 1) s += '^' + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

/// Sparse polynomial over Q in the parameter alphabet; terms sorted grevlex-descending.
class ParamPoly {
 public:
  struct Term {
    Monomial m;
    Rat c;
  };

  ParamPoly() = default;
  ParamPoly(const Rat& c) {  // NOLINT implicit: constants mix freely with polynomials
    if (!::doa::is_zero(c)) terms_.push_back({Monomial{}, c});
  }
  ParamPoly(long c) : ParamPoly(Rat(c)) {}  // NOLINT
  ParamPoly(int c) : ParamPoly(Rat(c)) {}   // NOLINT
  ParamPoly(ParamSymbol s) { terms_.push_back({Monomial::var(s), Rat(1)}); }  // NOLINT

  static ParamPoly monomial(const Monomial& m, const Rat& c) {
    ParamPoly p;
    if (!::doa::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  /// Terms in any order, duplicates allowed.
  static ParamPoly from_terms(std::vector<Term> ts) {
    ParamPoly p;
    p.terms_ = std::move(ts);
    p.canonicalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  Rat constant_value() const {
    for (const auto& t : terms_)
      if (t.m.is_one()) return t.c;
    return Rat(0);
  }
  std::size_t size() const { return terms_.size(); }
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }
  const Monomial& leading_monomial() const { return terms_.front().m; }
  const Rat& leading_coefficient() const { return terms_.front().c; }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.m.deg != terms_.front().m.deg) return false;
    return true;
  }

  std::set<ParamSymbol> symbols() const {
    std::set<ParamSymbol> out;
    for (const auto& t : terms_)
      for (int i = 0; i < kNumSymbols; ++i)
        if (t.m.e[i]) out.insert(static_cast<ParamSymbol>(i));
    return out;
  }

  friend bool operator==(const ParamPoly& p, const ParamPoly& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
      if (!(p.terms_[i].m == q.terms_[i].m) || p.terms_[i].c != q.terms_[i].c) return false;
    return true;
  }

  /// Total order used for deterministic output: term-by-term grevlex, then coefficients.
  friend int compare(const ParamPoly& p, const ParamPoly& q) {
    std::size_t k = std::min(p.terms_.size(), q.terms_.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (int c = grevlex_cmp(p.terms_[i].m, q.terms_[i].m)) return c;
      if (p.terms_[i].c != q.terms_[i].c) return p.terms_[i].c < q.terms_[i].c ? -1 : 1;
    }
    if (p.terms_.size() != q.terms_.size()) return p.terms_.size() < q.terms_.size() ? -1 : 1;
    return 0;
  }

  ParamPoly operator-() const {
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  ParamPoly& operator+=(const ParamPoly& q) {
    if (q.terms_.empty()) return *this;
    if (terms_.empty()) {
      terms_ = q.terms_;
      return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    merge_into(out, terms_, q.terms_, Rat(1));
    terms_ = std::move(out);
    return *this;
  }
  ParamPoly& operator-=(const ParamPoly& q) {
    if (q.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    merge_into(out, terms_, q.terms_, Rat(-1));
    terms_ = std::move(out);
    return *this;
  }
  /// this += s * m * q
  void add_scaled(const ParamPoly& q, const Rat& s, const Monomial& m = Monomial{}) {
    if (q.terms_.empty() || ::doa::is_zero(s)) return;
    std::vector<Term> shifted;
    shifted.reserve(q.terms_.size());
    for (const auto& t : q.terms_) shifted.push_back({t.m * m, t.c});
    std::vector<Term> out;
    out.reserve(terms_.size() + shifted.size());
    merge_into(out, terms_, shifted, s);
    terms_ = std::move(out);
  }

  ParamPoly& operator*=(const Rat& s) {
    if (::doa::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.c *= s;
    }
    return *this;
  }

  friend ParamPoly operator+(ParamPoly p, const ParamPoly& q) { return p += q; }
  friend ParamPoly operator-(ParamPoly p, const ParamPoly& q) { return p -= q; }
  friend ParamPoly operator*(ParamPoly p, const Rat& s) { return p *= s; }
  friend ParamPoly operator*(const Rat& s, ParamPoly p) { return p *= s; }

  friend ParamPoly operator*(const ParamPoly& p, const ParamPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if (q.is_constant()) return p * q.terms_[0].c;
    if (p.is_constant()) return q * p.terms_[0].c;
    std::vector<Term> ts;
    ts.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& s : p.terms_)
      for (const auto& t : q.terms_) ts.push_back({s.m * t.m, s.c * t.c});
    return from_terms(std::move(ts));
  }
  ParamPoly& operator*=(const ParamPoly& q) { return *this = *this * q; }

  ParamPoly pow(int k) const {
    ParamPoly r(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  /// Exact evaluation; every occurring symbol must be assigned.
  Rat eval(const std::map<ParamSymbol, Rat>& point) const {
    Rat total = 0;
    for (const auto& t : terms_) {
      Rat v = t.c;
      for (int i = 0; i < kNumSymbols; ++i) {
        if (!t.m.e[i]) continue;
        auto it = point.find(static_cast<ParamSymbol>(i));
        if (it == point.end()) throw UnboundSymbolError("unbound symbol " + std::string(kSymbolNames[i]));
        for (int k = 0; k < t.m.e[i]; ++k) v *= it->second;
      }
      total += v;
    }
    return total;
  }

  /// Substitute polynomials for symbols; unlisted symbols stay.
  ParamPoly substitute(const std::map<ParamSymbol, ParamPoly>& subs) const {
    if (subs.empty()) return *this;
    ParamPoly out;
    for (const auto& t : terms_) {
      ParamPoly term(t.c);
      Monomial rest;
      for (int i = 0; i < kNumSymbols; ++i) {
        if (!t.m.e[i]) continue;
        auto it = subs.find(static_cast<ParamSymbol>(i));
        if (it == subs.end()) {
          rest.e[i] = t.m.e[i];
          rest.deg = static_cast<std::uint8_t>(rest.deg + t.m.e[i]);
        } else {
          term *= it->second.pow(t.m.e[i]);
        }
      }
      out.add_scaled(term, Rat(1), rest);
    }
    return out;
  }

  ParamPoly specialize(const std::map<ParamSymbol, Rat>& point) const {
    std::map<ParamSymbol, ParamPoly> subs;
    for (const auto& [s, v] : point) subs.emplace(s, ParamPoly(v));
    return substitute(subs);
  }

  /// Positive rational c with this / c having coprime integer coefficients.
  Rat content() const {
    mpz_class num = 0, den = 1;
    for (const auto& t : terms_) {
      mpz_class a = abs(t.c.get_num());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), a.get_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  ParamPoly monic() const {
    if (terms_.empty()) return *this;
    Rat inv = 1 / terms_.front().c;
    return *this * inv;
  }

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grevlex_cmp(x.m, y.m) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c += t.c;
      } else {
        if (!out.empty() && ::doa::is_zero(out.back().c)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && ::doa::is_zero(out.back().c)) out.pop_back();
    terms_ = std::move(out);
  }

  static void merge_into(std::vector<Term>& out, const std::vector<Term>& x, const std::vector<Term>& y,
                         const Rat& s) {
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      int c = i == x.size() ? -1 : j == y.size() ? 1 : grevlex_cmp(x[i].m, y[j].m);
      if (c > 0) {
        out.push_back(x[i++]);
      } else if (c < 0) {
        out.push_back({y[j].m, s * y[j].c});
        ++j;
      } else {
        Rat v = x[i].c + s * y[j].c;
        if (!::doa::is_zero(v)) out.push_back({x[i].m, std::move(v)});
        ++i;
        ++j;
      }
    }
  }

  std::vector<Term> terms_;
};

inline ParamPoly sym(ParamSymbol s) { return ParamPoly(s); }

struct ZeroGeneratorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Content removed, grevlex-leading coefficient positive.
inline ParamPoly normalize_generator(const ParamPoly& p) {
  if (p.is_zero()) throw ZeroGeneratorError("cannot normalize the zero polynomial");
  Rat c = p.content();
  if (sgn(p.leading_coefficient()) < 0) c = -c;
  return p * (1 / c);
}

inline std::string to_string(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = sgn(t.c) < 0;
    Rat mag = abs(t.c);
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (t.m.is_one()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += to_string(t.m);
    } else {
      s += mag.get_str() + "*" + to_string(t.m);
    }
  }
  return s;
}

struct PolyParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parses the polytext grammar: signed terms, each a '*'-product of integers,
/// fractions p/q and symbols with optional ^exponent.
inline ParamPoly parse_poly(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> PolyParseError {
    return PolyParseError(why + " at offset " + std::to_string(i) + " in \"" + std::string(text) + "\"");
  };
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
  };
  auto digits = [&]() -> std::string {
    std::size_t st = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return std::string(text.substr(st, i - st));
  };
  std::vector<ParamPoly::Term> terms;
  skip();
  if (i == text.size()) throw fail("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Rat coef = sign;
    Monomial mono;
    while (true) {
      skip();
      if (i == text.size()) throw fail("dangling operator");
      char ch = text[i];
      if (ch >= '0' && ch <= '9') {
        std::string num = digits();
        Rat v{mpz_class(num)};
        skip();
        if (i < text.size() && text[i] == '/') {
          ++i;
          skip();
          std::string den = digits();
          if (den.empty()) throw fail("missing denominator");
          mpz_class d(den);
          if (d == 0) throw fail("zero denominator");
          v /= Rat(d);
        }
        coef *= v;
      } else if (ch >= 'a' && ch <= 'z') {
        std::size_t st = i;
        while (i < text.size() && ((text[i] >= 'a' && text[i] <= 'z') || (text[i] >= '0' && text[i] <= '9'))) ++i;
        auto s = symbol_from_name(text.substr(st, i - st));
        if (!s) throw fail("unknown symbol '" + std::string(text.substr(st, i - st)) + "'");
        int power = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          std::string e = digits();
          if (e.empty()) throw fail("missing exponent");
          power = std::stoi(e);
        }
        mono = mono * Monomial::var(*s, power);
      } else {
        throw fail(std::string("unexpected character '") + ch + "'");
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    terms.push_back({mono, coef});
  }
  return ParamPoly::from_terms(std::move(terms));
}

using Bindings = std::map<ParamSymbol, ParamPoly>;
using NumericPoint = std::map<ParamSymbol, Rat>;

}  // namespace doa
