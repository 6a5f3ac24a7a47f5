#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace doa {

inline constexpr int kMaxDegree = 16;

/// Thrown for permutations of mismatched or unsupported size.
struct SizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Every construction in the library assumes n >= 4.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void require_n(int n) {
  if (n < 4) throw DomainError("n must be at least 4, got " + std::to_string(n));
  if (n > kMaxDegree) throw DomainError("n above supported maximum " + std::to_string(kMaxDegree));
}

/// Permutation of {1..n}; stored 0-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n) : n_(static_cast<std::uint8_t>(n)) {
    if (n < 0 || n > kMaxDegree) throw SizeError("bad permutation degree");
    for (int i = 0; i < n; ++i) img_[i] = static_cast<std::uint8_t>(i);
  }

  /// One-line notation, 1-based images.
  static Perm from_images(const std::vector<int>& images) {
    Perm p(static_cast<int>(images.size()));
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < images.size(); ++i) {
      int v = images[i] - 1;
      if (v < 0 || v >= p.n() || seen[v]) throw std::invalid_argument("images are not a bijection");
      seen[v] = true;
      p.img_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
  }

  /// Cycle (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0, 1-based.
  static Perm cycle(int n, const std::vector<int>& pts) {
    Perm p(n);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      int from = pts[k], to = pts[(k + 1) % pts.size()];
      if (from < 1 || from > n || to < 1 || to > n) throw std::invalid_argument("cycle point out of range");
      p.img_[from - 1] = static_cast<std::uint8_t>(to - 1);
    }
    // a repeated point leaves a non-bijection behind
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < n; ++i) {
      if (seen[p.img_[i]]) throw std::invalid_argument("cycle repeats a point");
      seen[p.img_[i]] = true;
    }
    return p;
  }

  static Perm transposition(int n, int i, int j) { return cycle(n, {i, j}); }

  int n() const { return n_; }
  /// 1-based image of 1-based i.
  int operator()(int i) const { return img_[i - 1] + 1; }
  int image0(int i) const { return img_[i]; }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Perm& p, const Perm& q) { return p.n_ == q.n_ && p.img_ == q.img_; }
  friend std::strong_ordering operator<=>(const Perm& p, const Perm& q) {
    if (auto c = p.n_ <=> q.n_; c != 0) return c;
    return p.img_ <=> q.img_;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (int i = 0; i < n_; ++i) h = h * 31 + img_[i];
    return h;
  }

 private:
  friend Perm compose(const Perm&, const Perm&);
  friend Perm inverse(const Perm&);
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

/// (p∘q)(i) = p(q(i)).
inline Perm compose(const Perm& p, const Perm& q) {
  if (p.n_ != q.n_) throw SizeError("compose: mismatched n");
  Perm r(p.n_);
  for (int i = 0; i < p.n_; ++i) r.img_[i] = p.img_[q.img_[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.n_);
  for (int i = 0; i < p.n_; ++i) r.img_[p.img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

/// h g h^{-1}
inline Perm conjugate(const Perm& h, const Perm& g) { return compose(compose(h, g), inverse(h)); }

/// Cycles including fixed points, each starting at its smallest point, sorted by that point.
inline std::vector<std::vector<int>> cycles(const Perm& g) {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 1; i <= g.n(); ++i) {
    if (seen[i - 1]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j - 1]; j = g(j)) {
      seen[j - 1] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Cycle lengths, descending.
using CycleType = std::vector<int>;

inline CycleType classify(const Perm& g) {
  CycleType t;
  for (const auto& c : cycles(g)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

inline int moved_points(const Perm& g) {
  int m = 0;
  for (int i = 1; i <= g.n(); ++i) m += g(i) != i;
  return m;
}

inline bool is_transposition(const Perm& g) {
  auto t = classify(g);
  return t.size() >= 1 && t[0] == 2 && (t.size() == 1 || t[1] == 1);
}

inline bool is_3cycle(const Perm& g) {
  auto t = classify(g);
  return t.size() >= 1 && t[0] == 3 && (t.size() == 1 || t[1] == 1);
}

inline bool is_double_transposition(const Perm& g) {
  auto t = classify(g);
  return t.size() >= 2 && t[0] == 2 && t[1] == 2 && (t.size() == 2 || t[2] == 1);
}

inline std::string to_string(const Perm& g) {
  std::string s;
  for (const auto& c : cycles(g)) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

/// Accepts "(1 2)(3 4)", "(1,2)", "(123)" when every point is a single digit, and "()".
inline Perm parse_perm(std::string_view text, int n) {
  Perm acc(n);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip();
  if (i == text.size()) throw std::invalid_argument("empty permutation text");
  while (i < text.size()) {
    skip();
    if (i == text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("expected '(' in " + std::string(text));
    ++i;
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("unclosed cycle in " + std::string(text));
    std::string_view body = text.substr(i, close - i);
    bool separated = body.find_first_of(" ,") != std::string_view::npos;
    std::vector<int> pts;
    std::string tok;
    auto flush = [&] {
      if (!tok.empty()) pts.push_back(std::stoi(tok));
      tok.clear();
    };
    for (char ch : body) {
      if (ch >= '0' && ch <= '9') {
        tok += ch;
        if (!separated) flush();
      } else if (ch == ' ' || ch == ',' || ch == '\t') {
        flush();
      } else {
        throw std::invalid_argument("bad character in permutation " + std::string(text));
      }
    }
    flush();
    if (pts.size() >= 2) acc = compose(acc, Perm::cycle(n, pts));
    i = close + 1;
  }
  return acc;
}

/// All of S_n in lexicographic order of one-line notation (identity first).
inline std::vector<Perm> all_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// {(1 2), (1 2 ... n)} generates S_n.
inline std::vector<Perm> generators(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return {Perm::transposition(n, 1, 2), Perm::cycle(n, all)};
}

inline std::vector<Perm> transpositions(int n) {
  std::vector<Perm> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(Perm::transposition(n, i, j));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Perm> three_cycles(int n) {
  std::vector<Perm> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        out.push_back(Perm::cycle(n, {i, j, k}));
        out.push_back(Perm::cycle(n, {i, k, j}));
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace doa
