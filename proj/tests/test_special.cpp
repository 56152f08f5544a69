#include <doctest.h>

#include <cmath>

#include "cmm/special/bernoulli.hpp"
#include "cmm/special/functions.hpp"
#include "oracles.hpp"

using namespace cmm;
using namespace cmm::special;

TEST_CASE("Bernoulli numbers against Akiyama-Tanigawa")
{
    for (int n = 0; n <= 40; ++n) {
        CHECK_MESSAGE(bernoulli_number(n) == oracle::bernoulli_at(n), "n=" << n);
    }
    CHECK(bernoulli_number(1) == mpq_class(-1, 2));
    CHECK(bernoulli_number(12) == mpq_class(-691, 2730));
}

TEST_CASE("Bernoulli polynomials")
{
    // B_n(1) = B_n for n != 1, B_n(1/2) = (2^{1-n} - 1) B_n.
    for (int n = 2; n <= 20; ++n) {
        CHECK(bernoulli_polynomial(n, 1) == bernoulli_number(n));
        mpq_class scale(1, 1);
        scale /= mpq_class(mpz_class(1) << static_cast<unsigned>(n - 1));
        CHECK(bernoulli_polynomial(n, mpq_class(1, 2)) == (scale - 1) * bernoulli_number(n));
    }
    CHECK(bernoulli_polynomial(1, mpq_class(3, 4)) == mpq_class(1, 4));
    CHECK(bernoulli_polynomial(2, mpq_class(1, 4)) == mpq_class(-1, 48));
}

TEST_CASE("Lehmer domination grid")
{
    // |B_n(x)| <= 2 zeta(n) n! / (2 pi)^n on a grid of [0, 1], n <= 12.
    for (int n = 2; n <= 12; ++n) {
        const Interval bound = lehmer_bound(n);
        for (int k = 0; k < 100; ++k) {
            const Interval v = abs(Interval::rational(bernoulli_polynomial(n, mpq_class(k, 99))));
            CHECK(compare(v, bound) != Ordering::CertainlyGreater);
            CHECK(v.hi_up() <= bound.hi_up());
        }
    }
}

TEST_CASE("zeta at integers")
{
    CHECK(zeta_int(2).overlaps(sqr(pi()) / 6L));
    CHECK(zeta_int(3).overlaps(Interval::decimal("1.20205690315959428539973816151144999076498629234")));
    CHECK(zeta_int(5).overlaps(Interval::decimal("1.03692775514336992633136548645703416805708091950")));
    CHECK(zeta_int(3).width() < 1e-30);
}

TEST_CASE("Hurwitz zeta at s = 2")
{
    CHECK(std::fabs(hurwitz_zeta2(mpq_class(1, 4)).mid() - oracle::hurwitz_zeta2(0.25)) < 1e-9);
    CHECK(std::fabs(hurwitz_zeta2(mpq_class(3, 4)).mid() - oracle::hurwitz_zeta2(0.75)) < 1e-9);
    CHECK(hurwitz_zeta2(mpq_class(1, 2)).overlaps(sqr(pi()) / 2L));
    CHECK(hurwitz_zeta2(mpq_class(1)).overlaps(sqr(pi()) / 6L));
}

TEST_CASE("digamma at 1 and 1/2")
{
    CHECK(digamma_at(mpq_class(1)).overlaps(-constant(Constant::EulerGamma)));
    CHECK(std::fabs(digamma_at(mpq_class(1, 2)).mid() + 1.9635100260214235) < 1e-15);
    CHECK_THROWS_AS(digamma_at(mpq_class(1, 3)), UnsupportedArgument);
}

TEST_CASE("Bessel I_{-3/4} against the standard library")
{
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 40.0}) {
        const double want = oracle::bessel_I_m34(x);
        const double got = bessel_I_m34(Interval::point(x)).mid();
        CHECK_MESSAGE(std::fabs(got / want - 1.0) < 1e-12, "x=" << x);
    }
    // Larger arguments from the final inequality, checked for monotone growth.
    const Interval a = bessel_I_m34(Interval::point(60.0));
    const Interval b = bessel_I_m34(Interval::point(61.0));
    CHECK(compare(a, b) == Ordering::CertainlyLess);
    CHECK(a.width() / a.mid() < 1e-30);
}

TEST_CASE("H_a identity at ten points")
{
    for (const auto& a : {mpq_class(1), mpq_class(1, 2)}) {
        for (const auto& x : {mpq_class(1, 10), mpq_class(1, 2), mpq_class(1), mpq_class(2), mpq_class(3)}) {
            const BoundReport r = h_a_identity_check(a, x);
            CHECK_MESSAGE(r.verdict == Verdict::Verified, "a=" << a.get_str() << " x=" << x.get_str());
        }
    }
}
