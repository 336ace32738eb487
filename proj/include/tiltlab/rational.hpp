#pragma once

#include <gmpxx.h>

#include <string>

namespace tiltlab {

// Exact rational scalar used everywhere; no floating point in the core.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" (optional sign on either part). Canonicalizes the
// result. Throws std::invalid_argument on malformed text or q == 0.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

bool is_integer(const Rational& r);

Integer floor_rational(const Rational& r);
Integer ceil_rational(const Rational& r);

// True iff r is the square of a rational; writes that square root (>= 0)
// to *root when non-null.
bool rational_sqrt(const Rational& r, Rational* root);

}  // namespace tiltlab
