#include <string>

#include "cmm/circle/circle.hpp"
#include "cmm/special/bernoulli.hpp"
#include "cmm/special/functions.hpp"

namespace cmm::circle {

using special::bernoulli_polynomial;
using special::factorial;

namespace {

void require_quarter(int r, int t)
{
    if (t != 4 || (r != 1 && r != 3)) {
        throw UnsupportedArguments("only (r, t) = (1, 4) and (3, 4) are supported, got (" + std::to_string(r) +
                                   ", " + std::to_string(t) + ")");
    }
}

mpq_class qpow(const mpq_class& x, int n)
{
    mpq_class r = 1;
    for (int i = 0; i < n; ++i) {
        r *= x;
    }
    return r;
}

} // namespace

LaurentCoeffs brt_laurent(int r, int t, int maxN)
{
    if (r <= 0 || r > t || maxN < 1) {
        throw UnsupportedArguments("brt_laurent needs 0 < r <= t and maxN >= 1");
    }
    LaurentCoeffs L;
    L.r = r;
    L.t = t;
    L.A = mpq_class(r, t);
    L.A.canonicalize();
    const mpq_class x = 1 - L.A;
    for (int n = -2; n <= maxN; ++n) {
        L.c[n] = bernoulli_polynomial(n + 2, x) / mpq_class(factorial(n + 2));
    }
    const mpq_class cm1 = L.c[-1];
    for (int n = 0; n <= maxN; ++n) {
        const mpq_class pole_part = qpow(-L.A, n + 1) * cm1 / mpq_class(factorial(n + 1));
        L.c_star[n] = n <= L.N - 1 ? L.c[n] : pole_part;
        L.b[n] = L.c[n] - pole_part;
    }
    return L;
}

Interval beta_rt(int r, int t, Precision p)
{
    require_quarter(r, t);
    const Interval half_log_2pi = log(2L * pi(p)) / 2L;
    const Interval g14 = constant(Constant::GammaQuarter, p);
    if (r == 1) {
        return log(g14) - half_log_2pi;
    }
    // Gamma(1/4) Gamma(3/4) = pi / sin(pi/4) = pi sqrt 2
    return log(pi(p) * sqrt(Interval::point(2L, p)) / g14) - half_log_2pi;
}

mpq_class j_constant(int r, int t)
{
    require_quarter(r, t);
    return r == 1 ? mpq_class(649, 40000) : mpq_class(5, 64);
}

CInterval eval_F(const mpq_class& a, int r, int t, const CInterval& z, int K)
{
    require_quarter(r, t);
    const Precision p = z.precision();
    const Interval absz = abs(z);
    if (compare(absz, 2L * pi(p)) != Ordering::CertainlyLess) {
        throw OutOfDisk("eval_F needs |z| < 2 pi");
    }
    const LaurentCoeffs L = brt_laurent(r, t, std::max(K, 1));
    const Interval cm1 = Interval::rational(L.c.at(-1), p);

    const CInterval zinv = reciprocal(z);
    CInterval out = zinv * zinv * special::hurwitz_zeta2(a, p);
    out += zinv * beta_rt(r, t, p);
    CInterval lg = log(z);
    lg.re += constant(Constant::EulerGamma, p) + special::digamma_at(a, p);
    out -= zinv * lg * cm1;

    // -sum_{n<=K} c*_n B_{n+1}(a)/(n+1) z^n by Horner.
    CInterval series(Interval::point(0L, p));
    for (int n = K; n >= 0; --n) {
        const mpq_class d = L.c_star.at(n) * bernoulli_polynomial(n + 1, a) / (n + 1);
        series = series * z;
        series.re += Interval::rational(d, p);
    }
    out -= series;

    // |c*_n B_{n+1}(a)/(n+1) z^n| <= zeta(2)/|z| rho^{n+1}/(n+1), rho = A|z|/(2 pi)
    const Interval rho = Interval::rational(L.A, p) * absz / (2L * pi(p));
    const Interval tail = special::zeta_int(2, p) / absz * pow(rho, static_cast<long>(K + 2)) /
                          (static_cast<long>(K + 2) * (1L - rho));
    out.re.widen(tail);
    out.im.widen(tail);
    return out;
}

Interval eval_E(const mpq_class& a, int r, int t, const Interval& abs_z, int K)
{
    require_quarter(r, t);
    const Precision p = abs_z.precision();
    const Interval w = Interval::rational(a, p) * abs_z;
    const Interval two_pi = 2L * pi(p);
    if (compare(w, two_pi) != Ordering::CertainlyLess) {
        throw OutOfDisk("eval_E needs |a z| < 2 pi");
    }
    const LaurentCoeffs L = brt_laurent(r, t, K);
    Interval sum(p);
    for (int n = K; n >= 1; --n) {
        sum += Interval::rational(mpq_class(n) * abs(L.b.at(n)), p);
        sum *= w;
    }
    // |b_n| <= 2 zeta(2) / (2 pi)^{n+2} + A^{n+1} / (2 (n+1)!)
    const Interval rho = w / two_pi;
    Interval tail = 2L * special::zeta_int(2, p) / sqr(two_pi) * static_cast<long>(K + 1) *
                    pow(rho, static_cast<long>(K + 1)) / sqr(1L - rho);
    const Interval A = Interval::rational(L.A, p);
    const Interval Aw = A * w;
    tail += A / 2L * pow(Aw, static_cast<long>(K + 1)) / Interval::integer(factorial(K + 1), p) /
            (1L - Aw / static_cast<long>(K + 2));
    sum += tail;
    return Interval::rational(j_constant(r, t) / 12, p) * abs_z + Interval::rational(3, 5, p) * sum;
}

Interval eval_E(const mpq_class& a, int r, int t, const CInterval& z, int K)
{
    return eval_E(a, r, t, abs(z), K);
}

CInterval combined_F(const CInterval& z, int K)
{
    const mpq_class one = 1;
    const mpq_class half(1, 2);
    CInterval s = eval_F(one, 1, 4, 4L * z, K);
    s += eval_F(one, 3, 4, 8L * z, K);
    s -= eval_F(half, 3, 4, 8L * z, K);
    return (4L * z) * s;
}

Interval combined_E(const CInterval& z)
{
    const Interval az = abs(z);
    const mpq_class one = 1;
    const mpq_class half(1, 2);
    Interval s = eval_E(one, 1, 4, 4L * az);
    s += eval_E(one, 3, 4, 8L * az);
    s += eval_E(half, 3, 4, 8L * az);
    return 4L * az * s;
}

Interval brt_sum_real(const mpq_class& a, int r, int t, const Interval& z)
{
    if (!z.is_positive()) {
        throw NonPositiveArgument("brt_sum_real needs z > 0");
    }
    const Precision p = z.precision();
    const mpq_class Aq(r, t);
    const Interval A = Interval::rational(Aq, p);
    auto f = [&](const Interval& w) { return exp(-(A * w)) / (w * (1L - exp(-w))); };
    // Stop once A W exceeds (p + 20) log 2.
    const double W = (p.bits() + 20) * 0.6931471805599453 / Aq.get_d();
    const long M = static_cast<long>(W / z.lo_down()) + 2;
    Interval sum(p);
    for (long m = M - 1; m >= 0; --m) {
        sum += f(Interval::rational(a + m, p) * z);
    }
    // f decreases, so the tail is at most f(W) + (1/z) int_W^inf f.
    const Interval Wi = Interval::rational(a + M, p) * z;
    Interval tail = f(Wi) + exp(-(A * Wi)) / (A * Wi * (1L - exp(-Wi)) * z);
    mpfr_set_zero(tail.lo_mut(), 1);
    return sum + tail;
}

BoundReport lemma_brt_instance(const mpq_class& a, int r, int t, const mpq_class& zq, Precision p)
{
    const Interval z = Interval::rational(zq, p);
    const Interval S = brt_sum_real(a, r, t, z);
    const CInterval F = eval_F(a, r, t, CInterval(z));
    const Interval E = eval_E(a, r, t, z);
    BoundReport rep = make_report("lemma_brt", abs(S - F.re), E, Relation::Less);
    rep.with("r", std::to_string(r))
        .with("t", std::to_string(t))
        .with("a", a.get_str())
        .with("z", zq.get_str());
    return rep;
}

BoundReport laurent_consistency(int r, int t, const mpq_class& zq, Precision p)
{
    constexpr int kTop = 10;
    const LaurentCoeffs L = brt_laurent(r, t, kTop);
    const Interval z = Interval::rational(zq, p);
    Interval s(p);
    for (int n = kTop; n >= -2; --n) {
        s = s * z + Interval::rational(L.c.at(n), p);
    }
    s /= sqr(z);
    const Interval A = Interval::rational(L.A, p);
    const Interval closed = exp(-(A * z)) / (z * (1L - exp(-z)));
    const Interval rho = z / (2L * pi(p));
    const Interval tail = 2L * special::zeta_int(2, p) / sqr(2L * pi(p)) *
                          pow(rho, static_cast<long>(kTop + 1)) / (1L - rho);
    BoundReport rep = make_report("laurent_consistency", abs(s - closed), tail, Relation::Less);
    rep.with("r", std::to_string(r)).with("t", std::to_string(t)).with("z", zq.get_str());
    return rep;
}

BoundReport e_bounds_check(const mpq_class& a, int r, int t, const Interval& abs_z)
{
    require_quarter(r, t);
    const Precision p = abs_z.precision();
    const Interval az = Interval::rational(a, p) * abs_z;
    if (compare(az, pi(p) / 6L) != Ordering::CertainlyLess) {
        throw OutOfDisk("closed-form E bounds need |a z| < pi/6");
    }
    const mpq_class coef = r == 1 ? mpq_class(649, 480000) + mpq_class(99, 5000) * a
                                  : mpq_class(5, 768) + mpq_class(93, 2500) * a;
    BoundReport rep =
        make_report("lemma_E_closed_form", eval_E(a, r, t, abs_z), Interval::rational(coef, p) * abs_z, Relation::Less);
    rep.with("r", std::to_string(r)).with("t", std::to_string(t)).with("a", a.get_str()).with("abs_z", abs_z.str(10));
    return rep;
}

} // namespace cmm::circle
