#ifndef SLALG_RATIONAL_HPP
#define SLALG_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

#include "slalg/errors.hpp"

namespace slalg {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws ParseError.
Rat parse_rat(const std::string& text);

// "p" when integral, else "p/q" in lowest terms.
std::string rat_to_string(const Rat& q);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// q^e for integer e; e < 0 requires q != 0.
Rat pow_int(const Rat& q, long e);

// Exact e-th root when q is a perfect e-th power of a rational (e >= 1).
std::optional<Rat> exact_root(const Rat& q, unsigned long e);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline int sgn_of(const Rat& q) { return q > 0 ? 1 : q < 0 ? -1 : 0; }

// Floor/ceil as integers.
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

} // namespace slalg

#endif
