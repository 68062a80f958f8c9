#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kbh {

/// Exact rational coefficient. All series arithmetic in this library is exact.
using Q = mpq_class;
using Z = mpz_class;

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

/// Parses "p", "-p" or "p/q" (surrounding whitespace allowed) into a canonical rational.
Q parse_rational(std::string_view text);

/// Canonical "p/q" rendering, or "p" for integers.
std::string format_rational(const Q& q);

}  // namespace kbh
