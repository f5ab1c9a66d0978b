#ifndef TORFOCK_RATIONAL_HPP
#define TORFOCK_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

namespace torfock {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q".  Returns nullopt on malformed input.
inline std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  mpq_class r;
  if (r.set_str(s, 10) != 0) return std::nullopt;
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace torfock

#endif
