#include "cmm/special/functions.hpp"

#include <cmath>
#include <string>

#include "cmm/special/bernoulli.hpp"

namespace cmm::special {

namespace {

// 2^{-e} as an interval
Interval pow2_neg(long e, Precision p)
{
    Interval r = Interval::point(1L, p);
    mpfr_div_2si(r.lo_mut(), r.lo(), e, MPFR_RNDD);
    mpfr_div_2si(r.hi_mut(), r.hi(), e, MPFR_RNDU);
    return r;
}

// sum_{m>=0} (w + m)^{-s} for real w >= 1 and integer s >= 2, by
// Euler-Maclaurin. x^{-s} is completely monotone, so the remainder after the
// last kept Bernoulli term is bounded by the first omitted one.
Interval power_tail(int s, const Interval& w, Precision p)
{
    Interval sum = pow(w, static_cast<long>(1 - s)) / static_cast<long>(s - 1);
    sum += pow(w, static_cast<long>(-s)) / 2L;
    const Interval eps = pow2_neg(static_cast<long>(p.bits()) + 8, p);
    // rising = (s)_{2j-1}, wpow = w^{-s-2j+1}
    mpz_class rising = s;
    Interval wpow = pow(w, static_cast<long>(-s - 1));
    const Interval winv2 = 1L / sqr(w);
    for (int j = 1; j < 400; ++j) {
        const mpq_class coef = bernoulli_number(2 * j) / mpq_class(factorial(2 * j));
        Interval term = Interval::rational(coef * mpq_class(rising), p) * wpow;
        // Next term bound decides whether to stop after this one.
        const mpz_class next_rising = rising * (s + 2 * j - 1) * (s + 2 * j);
        const mpq_class next_coef = abs(bernoulli_number(2 * j + 2)) / mpq_class(factorial(2 * j + 2));
        const Interval bound = Interval::rational(next_coef * mpq_class(next_rising), p) * (wpow * winv2);
        sum += term;
        if (compare(bound, eps) == Ordering::CertainlyLess) {
            return sum.widen(bound);
        }
        rising = next_rising;
        wpow *= winv2;
    }
    throw Error("power_tail: Euler-Maclaurin terms did not fall below the target");
}

long tail_start(int s, Precision p) { return static_cast<long>(p.bits() / 4 + static_cast<unsigned>(s) + 10); }

} // namespace

Interval zeta_int(int n, Precision p)
{
    if (n < 2) {
        throw UnsupportedArgument("zeta_int needs n >= 2");
    }
    if (n % 2 == 0) {
        // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
        mpq_class c = bernoulli_number(n) / mpq_class(2 * factorial(n));
        if ((n / 2) % 2 == 0) {
            c = -c;
        }
        return Interval::rational(c, p) * pow(2L * pi(p), static_cast<long>(n));
    }
    const long M = tail_start(n, p);
    Interval sum(p);
    for (long k = M - 1; k >= 1; --k) {
        sum += pow(Interval::point(k, p), static_cast<long>(-n));
    }
    return sum + power_tail(n, Interval::point(M, p), p);
}

Interval lehmer_bound(int n, Precision p)
{
    if (n < 2) {
        throw UnsupportedArgument("lehmer_bound needs n >= 2");
    }
    return 2L * zeta_int(n, p) * Interval::integer(factorial(n), p) / pow(2L * pi(p), static_cast<long>(n));
}

Interval hurwitz_zeta2(const mpq_class& a, Precision p)
{
    if (sgn(a) <= 0 || a > 1) {
        throw UnsupportedArgument("hurwitz_zeta2 needs 0 < a <= 1");
    }
    const Interval pi2 = sqr(pi(p));
    if (a == 1) {
        return pi2 / 6L;
    }
    if (a == mpq_class(1, 2)) {
        return pi2 / 2L;
    }
    const long M = tail_start(2, p);
    Interval sum(p);
    for (long m = M - 1; m >= 0; --m) {
        sum += 1L / sqr(Interval::rational(a + m, p));
    }
    return sum + power_tail(2, Interval::rational(a + M, p), p);
}

Interval digamma_at(const mpq_class& a, Precision p)
{
    const Interval g = constant(Constant::EulerGamma, p);
    if (a == 1) {
        return -g;
    }
    if (a == mpq_class(1, 2)) {
        return -(2L * constant(Constant::Log2, p)) - g;
    }
    throw UnsupportedArgument("digamma is only available at 1 and 1/2");
}

Interval bessel_I_m34(const Interval& x, int K)
{
    if (!x.is_positive()) {
        throw NonPositiveArgument("bessel_I_m34 needs x > 0");
    }
    const Precision p = x.precision();
    const Interval half = x / 2L;
    const Interval u4 = 4L * sqr(half); // 4 (x/2)^2
    if (K <= 0) {
        K = std::max(32, static_cast<int>(std::ceil(2.0 * x.hi_up())));
    }
    // Ratio term_{k+1}/term_k = 4u / ((k+1)(4k+1)); push K until the first
    // omitted ratio is below 1/2 so the tail is a clean geometric series.
    const Interval half_i = Interval::rational(1, 2, p);
    auto ratio = [&](long k) { return u4 / ((k + 1) * (4 * k + 1)); };
    while (compare(ratio(K + 1), half_i) != Ordering::CertainlyLess) {
        ++K;
    }
    Interval term = exp(Interval::rational(-3, 4, p) * log(half)) / constant(Constant::GammaQuarter, p);
    Interval sum = term;
    for (long k = 0; k < K; ++k) {
        term *= u4;
        term /= (k + 1) * (4 * k + 1);
        sum += term;
    }
    // term is term_K; terms past it are bounded by term_K * rho^j.
    const Interval rho = ratio(K);
    Interval tail = term * rho / (1L - ratio(K + 1));
    mpfr_set_zero(tail.lo_mut(), 1);
    return sum + tail;
}

BoundReport h_a_identity_check(const mpq_class& a, const mpq_class& xq, Precision p)
{
    const Interval x = Interval::rational(xq, p);
    const Interval two_pi = 2L * pi(p);
    if (sgn(xq) <= 0 || compare(x, two_pi) != Ordering::CertainlyLess) {
        throw UnsupportedArgument("h_a_identity_check needs 0 < x < 2 pi");
    }
    // Exponential sum, truncated where e^{-(M+a)x} is far below 2^{-p}.
    const long M = static_cast<long>(std::ceil((p.bits() + 16) * std::log(2.0) / xq.get_d())) + 2;
    Interval s1(p);
    for (long m = M - 1; m >= 0; --m) {
        const Interval ma = Interval::rational(a + m, p);
        s1 += exp(-(ma * x)) / ma;
    }
    {
        const Interval Ma = Interval::rational(a + M, p);
        Interval t = exp(-(Ma * x)) / (Ma * (1L - exp(-x)));
        mpfr_set_zero(t.lo_mut(), 1);
        s1 += t;
    }
    // Bernoulli series, exact up to K, Lehmer majorant beyond.
    const Interval rho = x / two_pi;
    int K = 8;
    auto tail_bound = [&](int k) {
        return 2L * zeta_int(2, p) * pow(rho, static_cast<long>(k + 2)) / (static_cast<long>(k + 2) * (1L - rho));
    };
    const Interval eps = pow2_neg(static_cast<long>(p.bits()) + 4, p);
    while (compare(tail_bound(K), eps) != Ordering::CertainlyLess && K < 4000) {
        K += 8;
    }
    mpq_class s2 = 0;
    mpq_class xp = -xq; // (-x)^{n+1}
    for (int n = 0; n <= K; ++n) {
        s2 += bernoulli_polynomial(n + 1, a) / mpq_class((n + 1) * factorial(n + 1)) * xp;
        xp *= -xq;
    }
    Interval lhs = s1 + Interval::rational(s2, p);
    lhs.widen(tail_bound(K));
    const Interval rhs = -log(x) - constant(Constant::EulerGamma, p) - digamma_at(a, p);
    BoundReport r = make_report("h_a_identity", lhs, rhs, Relation::Overlaps);
    r.with("a", a.get_str()).with("x", xq.get_str()).with("exp_terms", std::to_string(M)).with(
        "bernoulli_terms", std::to_string(K + 1));
    return r;
}

} // namespace cmm::special
