#pragma once

#include <gmpxx.h>

#include <string>

namespace symdist {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);
Integer power(const Integer& base, unsigned long exponent);

/// Exact decimal text: "7", "-3", or "a/b" in lowest terms.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace symdist
