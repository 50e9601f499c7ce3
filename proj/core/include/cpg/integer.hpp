#pragma once

#include <gmpxx.h>

#include <string>

namespace cpg {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);
// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

// Floor-mod with a result in [0, |modulus|).
Integer floor_mod(const Integer& value, const Integer& modulus);

// Representative of value mod modulus in (-modulus/2, modulus/2].
Integer symmetric_mod(const Integer& value, const Integer& modulus);

Integer gcd(const Integer& a, const Integer& b);

}  // namespace cpg
