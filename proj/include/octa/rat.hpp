#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace octa {

// Exact rational scalar. GMP keeps results of arithmetic canonical
// (denominator > 0, lowest terms) as long as the operands are canonical,
// so every constructor below canonicalizes.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Canonical "p/q" rendering, denominator always present ("0/1", "-3/2").
std::string rat_pq(const Rat& q);

// Natural rendering: "3", "-5/7".
inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Parses "p/q", integers, and plain decimals ("-1.25", "3e-2") as exact
// rationals. Returns nullopt on anything else.
std::optional<Rat> parse_rat(const std::string& token);

// Shortest decimal string that round-trips through double. Lossy by design;
// used only for presentation formats.
std::string shortest_double(double v);

}  // namespace octa
