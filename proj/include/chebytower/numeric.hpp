#pragma once

#include <gmpxx.h>

#include <string>

#include "chebytower/errors.hpp"

namespace chebytower {

// Exact arithmetic carriers for the whole library. Both are immutable value
// types in practice: every operation returns a fresh, normalized value.
using Int = mpz_class;
using Rat = mpq_class;

/// C(n, k), total: returns 0 when k < 0 or k > n.
Int binomial(unsigned long n, long k);

/// 2^e, exact.
Int pow2(unsigned long e);

/// Normalized rational num/den (gcd 1, positive denominator).
/// Throws DomainError when den == 0.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

/// 1 on even arguments, 0 on odd ones. Total on nonnegative integers.
inline int even_indicator(long k) { return k % 2 == 0 ? 1 : 0; }

/// Decimal-string serialization; the canonical machine format everywhere
/// (CLI JSON/CSV, cache files). No exponent notation, no whitespace.
std::string to_string(const Int& v);

/// "p/q" with q > 0 and gcd(|p|, q) = 1; the "/q" part is omitted when q = 1.
std::string to_string(const Rat& v);

/// Parse a decimal integer string. Throws DomainError on malformed input.
Int int_from_string(const std::string& s);

/// Parse "p" or "p/q"; the result is normalized. Throws DomainError on
/// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

/// Numerator of an integral rational. Throws DomainError otherwise.
Int to_integer(const Rat& v);

}  // namespace chebytower
