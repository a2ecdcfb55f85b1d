#ifndef LIEKIT_RATIONAL_HPP
#define LIEKIT_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace liekit {

/*
 * Ground field: exact rationals, backed by GMP's mpq_class.
 *
 * Invariants (canonical form): denominator > 0, gcd(|num|, den) = 1.
 * GMP keeps arithmetic results canonical as long as every entry point
 * canonicalizes, so construction goes through the helpers below.
 *
 * Wire format: "p/q", or "p" when q = 1.  Parsing rejects a zero
 * denominator and normalizes non-canonical input.
 */
using Rat = mpq_class;

// num/den in canonical form; throws std::domain_error on den == 0.
Rat rat(long num, long den = 1);

// Parse "p/q" or "p" (optional sign, arbitrary precision).
// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical "p/q" / "p" rendering.
std::string rat_to_string(const Rat& x);

} // namespace liekit

#endif
