#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

// Reference computations that share no code with the library.
namespace oracle {

// Coefficients of 1/((q;q^4)_inf (-q^3;q^4)_inf) by enumerating signed
// partitions: parts = 1 mod 4 and parts = 3 mod 4, both with repetition,
// each 3 mod 4 part contributing a factor -1.
std::vector<std::int64_t> signed_partition_counts(int order);

// B_n via the Akiyama-Tanigawa algorithm, with the convention B_1 = -1/2.
mpq_class bernoulli_at(int n);

// gcd(a, b): the gl(n) index of the seaweed with compositions (a, b) | (a+b).
int two_block_index(int a, int b);

// Log G(e^{-x}) for real x by the direct double sum over (q;q^4) and
// (-q^3;q^4) factors, in long double.
long double log_G_real(long double x);

// I_{-3/4}(x) from the standard library's Bessel functions of order 3/4.
double bessel_I_m34(double x);

// zeta(2, a) by a partial sum plus a three-term Euler-Maclaurin tail.
double hurwitz_zeta2(double a);

// Point-evaluates random operations at 128 bits and counts results whose
// enclosure misses the 512-bit MPFR reference value.
long containment_violations(int samples, unsigned seed);

} // namespace oracle
