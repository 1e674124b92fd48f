#pragma once

#include <gmpxx.h>

namespace su3franel {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational: denominator > 0, gcd(num, den) = 1. Throws on den = 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

// Binomial coefficient with the vanishing convention: C(n,k) = 0 for k < 0
// or k > n.
Integer binomial(unsigned long n, long k);

// Franel number: sum of C(n,k)^3 over k = 0..n.
Integer franel(unsigned long n);

}  // namespace su3franel
