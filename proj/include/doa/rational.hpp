#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace doa {

/// Exact rationals. GMP keeps them canonical after every arithmetic op.
using Rat = mpq_class;

inline Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

/// num/den in canonical form (the two-argument mpq_class constructor does not reduce).
inline Rat frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

}  // namespace doa
