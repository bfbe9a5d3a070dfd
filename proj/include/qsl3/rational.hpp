#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qsl3 {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);

bool is_integer(const Rat& r);
/// True for r in 2Z+1.
bool is_odd(const Rat& r);
/// True for r in 2Z.
bool is_even(const Rat& r);
mpz_class floor(const Rat& r);
/// Representative of r modulo m in [0, m).
Rat mod(const Rat& r, const Rat& m);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

} // namespace qsl3
