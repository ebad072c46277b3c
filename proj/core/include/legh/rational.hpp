#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace legh {

using BigInt = mpz_class;

/// Exact rational in lowest terms with positive denominator. GMP keeps the
/// canonical form as long as every value leaves `make_rational` or an
/// arithmetic operator (both canonicalize).
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p", "-p", "p/q" (decimal integers). Throws InvalidInput.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

/// Natural log of |v| for v != 0, accurate for integers far beyond double range.
double log_abs(const BigInt& v);

double to_double(const BigRational& v);

/// Sign of |a| - |b|.
inline int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace legh
