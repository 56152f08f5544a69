#include <doctest.h>

#include <cmath>

#include "cmm/circle/circle.hpp"
#include "cmm/series/qseries.hpp"
#include "oracles.hpp"

using namespace cmm;
using namespace cmm::circle;

namespace {

CInterval cpt(double x, double y)
{
    return {Interval::point(x), Interval::point(y)};
}

mpq_class b_coefficient(const LaurentCoeffs& L, int n)
{
    mpq_class p = 1;
    mpz_class f = 1;
    for (int i = 1; i <= n + 1; ++i) {
        p *= -L.A;
        f *= i;
    }
    return L.c.at(n) - p * L.c.at(-1) / f;
}

} // namespace

TEST_CASE("Laurent data of B_{r,t}")
{
    const LaurentCoeffs L = brt_laurent(1, 4, 8);
    CHECK(L.c.at(-2) == 1);
    CHECK(L.c.at(-1) == mpq_class(1, 4));
    CHECK(L.b.at(1) == mpq_class(-1, 64));
    CHECK(brt_laurent(3, 4, 8).b.at(1) == mpq_class(5, 64));
    for (int n = 0; n <= 8; ++n) {
        CHECK(L.b.at(n) == b_coefficient(L, n));
    }
    for (const auto& [r, t] : {std::pair{1, 4}, std::pair{3, 4}}) {
        for (const auto& z : {mpq_class(1, 10), mpq_class(1, 2), mpq_class(1)}) {
            CHECK(laurent_consistency(r, t, z).verdict == Verdict::Verified);
        }
    }
}

TEST_CASE("beta_{r,t} against lgamma")
{
    CHECK(std::fabs(beta_rt(1, 4).mid() - (std::lgamma(0.25) - 0.5 * std::log(2 * M_PI))) < 1e-13);
    CHECK(std::fabs(beta_rt(3, 4).mid() - (std::lgamma(0.75) - 0.5 * std::log(2 * M_PI))) < 1e-13);
}

TEST_CASE("Lemma B_rt instances on the real axis")
{
    int verified = 0;
    for (const auto& [r, t] : {std::pair{1, 4}, std::pair{3, 4}}) {
        for (const auto& a : {mpq_class(1), mpq_class(1, 2)}) {
            for (const auto& z : {mpq_class(1, 10), mpq_class(1, 2), mpq_class(1)}) {
                verified += lemma_brt_instance(a, r, t, z).verdict == Verdict::Verified;
            }
        }
    }
    CHECK(verified == 12);
}

TEST_CASE("E closed-form majorant for (1,4)")
{
    for (const auto& a : {mpq_class(1), mpq_class(1, 2)}) {
        CHECK(e_bounds_check(a, 1, 4, Interval::point(0.2)).verdict == Verdict::Verified);
    }
}

TEST_CASE("F tracks Log G at real z")
{
    // combined_F against the direct product, within the combined E bound.
    for (double x : {0.01, 0.02, 0.05}) {
        const double diff = std::fabs(combined_F(cpt(x, 0.0)).re.mid() - static_cast<double>(oracle::log_G_real(x)));
        CHECK(diff < combined_E(cpt(x, 0.0)).hi_up());
    }
}

TEST_CASE("expansion constants from Log G by extrapolation")
{
    // R(x) = Log G - pi^2/(48x) + log(x)/4 = alpha_0 + alpha_1 x + O(x^2).
    auto R = [](long double x) {
        return oracle::log_G_real(x) - static_cast<long double>(M_PI * M_PI) / (48.0L * x) + std::log(x) / 4.0L;
    };
    const long double h = 1e-3L;
    const long double r1 = R(h);
    const long double r2 = R(2 * h);
    const long double r4 = R(4 * h);
    // Second-order Richardson for the value and slope at 0.
    const long double a0 = (8 * r1 - 6 * r2 + r4) / 3;
    const long double a1 = (-4 * r1 + 5 * r2 - r4) / (2 * h);
    const FExpansion f = f_expansion(4);
    CHECK(std::fabs(static_cast<double>(a0) - f.alpha_0.mid()) < 1e-6);
    CHECK(f.alpha_log == mpq_class(-1, 4));
    CHECK(std::fabs(static_cast<double>(a1) - 1.0 / 24.0) < 5e-3);
    CHECK(f.alpha_1 == mpq_class(1, 24));
    CHECK(f.alpha_m1.overlaps(sqr(pi()) / 48L));
    CHECK(std::fabs(f.alpha_0_closed_form.mid() - 0.0514932801) < 1e-10);
}

TEST_CASE("J integrals")
{
    const JAnalysis j14 = analyze_j(1, 4);
    REQUIRE(j14.alpha);
    CHECK(j14.sign_pattern_certified);
    CHECK(j14.alpha->lo_down() > 15.45);
    CHECK(j14.alpha->hi_up() < 15.46);
    CHECK(compare(j14.J, Interval::rational(j_constant(1, 4))) == Ordering::CertainlyLess);
    CHECK(std::fabs(j14.J_quadrature - j14.J.mid()) < 1e-6);
    const JAnalysis j34 = analyze_j(3, 4);
    CHECK_FALSE(j34.alpha);
    CHECK(j34.sign_pattern_certified);
    CHECK(j34.J.contains(mpq_class(5, 64)));
    CHECK(std::fabs(j34.J_quadrature - 5.0 / 64.0) < 1e-6);
}

TEST_CASE("Log G direct sum")
{
    // exp(Log G(e^{-1})) against the coefficients of G.
    const auto g = cmm::series::expand_G(120);
    double s = 0.0;
    for (std::size_t n = 0; n <= 120; ++n) {
        s += g[n].get_d() * std::exp(-static_cast<double>(n));
    }
    CHECK(std::fabs(std::exp(log_G_direct(cpt(1.0, 0.0), 60).re.mid()) / s - 1.0) < 1e-13);
    const CInterval far = log_G_direct(cpt(20.0, 0.0));
    CHECK(std::fabs(far.re.mid() - std::exp(-20.0)) < 1e-15);
    CHECK(log_G_tail(Interval::point(1L), 120).hi_up() * 2 < log_G_tail(Interval::point(1L), 60).hi_up());
    // At y = pi, q = -e^{-x} and Log G is a real product over both classes.
    long double direct = 0.0L;
    for (long k = 0; k < 20000; ++k) {
        direct += -std::log1p(std::exp(-(4 * k + 1) * 0.01L)) - std::log1p(-std::exp(-(4 * k + 3) * 0.01L));
    }
    const Interval at_pi = re_log_G(Interval::point(0.01), pi());
    CHECK(std::fabs(at_pi.mid() - static_cast<double>(direct)) < 1e-12);
    CHECK(at_pi.is_positive());
}

TEST_CASE("major arc")
{
    CHECK(major_arc_check(cpt(0.01, 0.0)).verdict == Verdict::Verified);
    const CInterval edge{Interval::rational(1, 100), Interval::rational(3, 10)};
    CHECK_THROWS_AS(major_arc_check(edge), NotOnMajorArc);
    // Well inside the cone the bound holds; near its edge it does not.
    CHECK(major_arc_check(cpt(0.005, 0.01)).verdict == Verdict::Verified);
    CHECK(major_arc_check(cpt(0.005, 0.1)).verdict == Verdict::Failed);
}

TEST_CASE("minor arc ingredients")
{
    CHECK(alpha_m_verify(1, 3508).verdict == Verdict::Verified);
    CHECK(alpha_m_verify(4, 40000).verdict == Verdict::Verified);
    CHECK(alpha_m_verify(1, 10000).verdict == Verdict::Failed);
    CHECK(alpha_m_verify(1, 3520).verdict == Verdict::Failed); // minimum is about 3511.7

    const BoundReport c = minor_arc_final_constant();
    CHECK(c.verdict == Verdict::Verified);
    CHECK(std::fabs(c.lhs.mid() - 0.1992095327) < 1e-10);

    CHECK(eta_transform_bound(pi() / 480L).verdict == Verdict::Verified);
    CHECK(eta_transform_bound(Interval::point(0.001)).verdict == Verdict::Verified);
    CHECK_THROWS_AS(eta_transform_bound(Interval::point(0.01)), UnsupportedArgument);

    // Log P(q) - Log P(q^2) = sum q^m / (m (1 - q^{2m})) at x = 1.
    const double q = std::exp(-1.0);
    double direct = 0.0;
    for (int m = 1; m < 200; ++m) {
        direct += std::pow(q, m) / (m * (1.0 - std::pow(q, 2 * m)));
    }
    const Interval Q = exp(Interval::point(-1L));
    CHECK(std::fabs((log_P(Q) - log_P(sqr(Q))).mid() - direct) < 1e-14);
}

TEST_CASE("final reduction")
{
    CHECK(std::fabs(exponent_gap().mid() - 0.0123867247) < 1e-10);
    CHECK(error_budget_E(1).is_positive());
    CHECK(final_reduction_verdict(2400) == Verdict::Verified);
    CHECK(final_reduction_verdict(100000) == Verdict::Verified);
    CHECK(final_reduction_verdict(2322) == Verdict::Failed);
    const auto par = threshold_scan(2300, 2500, 4);
    const auto ser = threshold_scan_serial(2300, 2500);
    CHECK(par.failures == ser.failures);
    CHECK(par.threshold == ser.threshold);
    CHECK(par.verified_above_threshold);
}
