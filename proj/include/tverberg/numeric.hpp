#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tverberg {

// GMP keeps mpq_class canonical after every arithmetic operation:
// denominator > 0 and gcd(|num|, den) = 1.
using BigInt = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

BigInt factorial(unsigned n);

}  // namespace tverberg
