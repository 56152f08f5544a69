#pragma once

#include <gmpxx.h>

#include "cmm/rigor/interval.hpp"
#include "cmm/rigor/report.hpp"

namespace cmm::special {

// zeta(n) for integer n >= 2: partial sum plus the integral tail bracket.
Interval zeta_int(int n, Precision p = Precision{});

// Upper enclosure of max_{[0,1]} |B_n(x)| as 2 zeta(n) n! / (2 pi)^n.
Interval lehmer_bound(int n, Precision p = Precision{});

// zeta(2, a) = sum_{m>=0} (m + a)^{-2} for 0 < a <= 1.
Interval hurwitz_zeta2(const mpq_class& a, Precision p = Precision{});

// psi(1) = -gamma, psi(1/2) = -2 log 2 - gamma. Other arguments throw.
Interval digamma_at(const mpq_class& a, Precision p = Precision{});

// I_{-3/4}(x) by its positive power series. K = 0 picks
// max(32, ceil(2 x.hi)); the tail past K is a geometric majorant.
Interval bessel_I_m34(const Interval& x, int K = 0);

// Evaluates sum_m e^{-(m+a)x}/(m+a) + sum_n B_{n+1}(a)/((n+1)(n+1)!) (-x)^{n+1}
// and checks it against -log x - gamma - psi(a).
BoundReport h_a_identity_check(const mpq_class& a, const mpq_class& x, Precision p = Precision{});

} // namespace cmm::special
