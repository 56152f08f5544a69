#pragma once

#include <gmpxx.h>

namespace cmm::special {

// B_n under z e^{(x-1)z} / (1 - e^{-z}) = sum B_n(x) z^n / n!, so B_1 = -1/2.
// Thread-safe; the table grows under a lock and is read without one afterwards
// only through copies.
mpq_class bernoulli_number(int n);

// B_n(x) = sum_k C(n,k) B_k x^{n-k}
mpq_class bernoulli_polynomial(int n, const mpq_class& x);

mpz_class binomial(int n, int k);
mpz_class factorial(int n);

} // namespace cmm::special
