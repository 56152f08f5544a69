#include <doctest.h>

#include <cmath>

#include "cmm/rigor/complex.hpp"
#include "cmm/rigor/interval.hpp"
#include "cmm/rigor/report.hpp"
#include "oracles.hpp"

using namespace cmm;

namespace {

// x agrees with a truncated decimal to within tol.
bool agrees(const Interval& x, const char* decimal, const char* tol)
{
    Interval d = Interval::decimal(decimal);
    d.widen(Interval::decimal(tol));
    return x.overlaps(d);
}

} // namespace

TEST_CASE("point and rational enclosures")
{
    const Interval third = Interval::rational(1, 3);
    CHECK(third.contains(mpq_class(1, 3)));
    CHECK(third.width() < 1e-37);
    CHECK(Interval::point(0.1).width() == 0.0);
    CHECK(Interval::decimal("0.1").contains(mpq_class(1, 10)));
    CHECK_FALSE(Interval::point(0.1).contains(mpq_class(1, 10)));
}

TEST_CASE("division by an interval containing zero throws")
{
    const Interval z = Interval::hull(Interval::point(-1L), Interval::point(1L));
    CHECK_THROWS_AS(Interval::point(1L) / z, DivisionByIntervalContainingZero);
    CHECK_THROWS_AS(sqrt(Interval::point(-1L)), NegativeSqrt);
    CHECK_THROWS_AS(log(Interval::point(0L)), LogNonPositive);
}

TEST_CASE("constants against known digits")
{
    CHECK(agrees(pi(), "3.14159265358979323846264338327950288", "1e-35"));
    CHECK_FALSE(agrees(pi(), "3.14159265358979323846264338327950388", "1e-36"));
    CHECK(agrees(constant("euler_gamma"), "0.57721566490153286060651209008240243", "1e-35"));
    CHECK(agrees(constant(Constant::Log2), "0.69314718055994530941723212145817657", "1e-35"));
    CHECK(agrees(constant(Constant::GammaQuarter), "3.62560990822190831193068515586767200", "1e-35"));
    CHECK_THROWS_AS(constant("tau"), UnknownConstant);
    // Higher precision refines, never contradicts.
    CHECK(constant(Constant::EulerGamma, Precision(128)).contains(constant(Constant::EulerGamma, Precision(512))));
}

TEST_CASE("trig covers interior extrema")
{
    const Interval around_half_pi = Interval::hull(Interval::point(1.5), Interval::point(1.7));
    CHECK(sin(around_half_pi).contains(1.0));
    const Interval wide = Interval::hull(Interval::point(0L), Interval::point(7L));
    CHECK(cos(wide).contains(1.0));
    CHECK(cos(wide).contains(-1.0));
}

TEST_CASE("containment fuzzing against a 512-bit reference")
{
    CHECK(oracle::containment_violations(10000, 20240601) == 0);
}

TEST_CASE("dyadic endpoints round-trip")
{
    const Interval x = Interval::rational(7, 3);
    const Dyadic lo = x.lo_dyadic();
    mpz_class m(lo.mantissa);
    mpq_class v(m);
    if (lo.exponent >= 0) {
        v *= mpq_class(mpz_class(1) << static_cast<unsigned long>(lo.exponent));
    } else {
        v /= mpq_class(mpz_class(1) << static_cast<unsigned long>(-lo.exponent));
    }
    CHECK(v < mpq_class(7, 3));
    CHECK(mpq_class(7, 3) - v < mpq_class(1, 1000000));
}

TEST_CASE("complex enclosures")
{
    const CInterval z(Interval::point(0.3), Interval::point(-0.4));
    const CInterval e = exp(log(z));
    CHECK(e.re.contains(0.3));
    CHECK(e.im.contains(-0.4));
    const CInterval p = pow(z, 3);
    const CInterval q = z * z * z;
    CHECK(p.re.overlaps(q.re));
    CHECK(std::fabs(abs(z).mid() - 0.5) < 1e-16);
}

TEST_CASE("verdict combination")
{
    CHECK(combine(Verdict::Verified, Verdict::Skipped) == Verdict::Verified);
    CHECK(combine(Verdict::Indeterminate, Verdict::Verified) == Verdict::Indeterminate);
    CHECK(combine(Verdict::Indeterminate, Verdict::Failed) == Verdict::Failed);
    CHECK(decide(Interval::point(1L), Interval::point(2L), Relation::Less) == Verdict::Verified);
    CHECK(decide(Interval::point(3L), Interval::point(2L), Relation::Less) == Verdict::Failed);
    const Interval wide = Interval::hull(Interval::point(1L), Interval::point(3L));
    CHECK(decide(wide, Interval::point(2L), Relation::Less) == Verdict::Indeterminate);
}
