#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace metakzb {

using Int = mpz_class;
using Rational = mpq_class;

// B_0 = 1, B_1 = -1/2, B_2 = 1/6, ...  Memoized; safe to call concurrently.
const Rational& bernoulli(int k);

Int factorial_int(int n);
Int binomial_int(int n, int k);

Rational rat_factorial(int n);
Rational rat_inv_factorial(int n);

// q^e for e >= 0; q != 0 required when e < 0.
Rational rat_pow(const Rational& q, long e);

// sum of d^e over divisors d of m; m >= 1, e >= 0.
Int divisor_power_sum(long m, int e);

}  // namespace metakzb
