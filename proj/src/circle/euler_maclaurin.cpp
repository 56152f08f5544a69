#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "cmm/circle/circle.hpp"
#include "cmm/special/bernoulli.hpp"
#include "cmm/special/functions.hpp"

namespace cmm::circle {

using special::bernoulli_polynomial;
using special::factorial;

namespace {

// Truncated Taylor jet (f, f', f'', f''') with interval entries.
struct Jet {
    Interval v, d1, d2, d3;
};

Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3}; }
Jet operator*(const Interval& s, const Jet& a) { return {s * a.v, s * a.d1, s * a.d2, s * a.d3}; }

Jet operator*(const Jet& a, const Jet& b)
{
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2L * (a.d1 * b.d1) + a.v * b.d2,
            a.d3 * b.v + 3L * (a.d2 * b.d1) + 3L * (a.d1 * b.d2) + a.v * b.d3};
}

Jet operator/(const Jet& u, const Jet& v)
{
    Jet w;
    w.v = u.v / v.v;
    w.d1 = (u.d1 - w.v * v.d1) / v.v;
    w.d2 = (u.d2 - 2L * (w.d1 * v.d1) - w.v * v.d2) / v.v;
    w.d3 = (u.d3 - 3L * (w.d2 * v.d1) - 3L * (w.d1 * v.d2) - w.v * v.d3) / v.v;
    return w;
}

Jet exp(const Jet& u)
{
    const Interval e = cmm::exp(u.v);
    return {e, e * u.d1, e * (u.d2 + sqr(u.d1)), e * (u.d3 + 3L * (u.d1 * u.d2) + pow(u.d1, 3L))};
}

Jet constant_jet(const Interval& c)
{
    const Interval z = Interval::point(0L, c.precision());
    return {c, z, z, z};
}

constexpr double kSeriesEdge = 1.5;
constexpr int kSeriesTerms = 60;

// g = B_{r,t} minus its singular part, with the data needed to evaluate its
// jets, prepared once per precision.
struct GModel {
    LaurentCoeffs L;
    Precision p;
    Interval A;
    Interval c;
    std::array<std::vector<Interval>, 4> coef; // n!/(n-k)! b_n
    Interval tail;

    GModel(int r, int t, Precision prec)
        : L(brt_laurent(r, t, kSeriesTerms)), p(prec), A(Interval::rational(L.A, prec)),
          c(Interval::rational(L.c.at(-1), prec)), tail(prec)
    {
        for (int k = 0; k < 4; ++k) {
            for (int n = k; n <= kSeriesTerms; ++n) {
                mpz_class falling = 1;
                for (int i = 0; i < k; ++i) {
                    falling *= n - i;
                }
                coef[static_cast<std::size_t>(k)].push_back(
                    Interval::rational(L.b.at(n) * mpq_class(falling), p));
            }
        }
        // |b_n| <= 2 zeta(2) (2 pi)^{-n-2} + A^{n+1}/(2 (n+1)!) and
        // n^k x^{n-k} with x <= X, k <= 3: bound sum_{n>K} n^3 s^n.
        const Interval X = Interval::rational(3, 2, p);
        const long K1 = kSeriesTerms + 1;
        auto cubic_tail = [&](const Interval& s) {
            // sum_{j>=0} (K1 + j)^3 s^{K1+j} <= K1^3 s^{K1} sum (1+j)^3 s^j
            const Interval geo = (1L + 4L * s + sqr(s)) / pow(1L - s, 4L);
            return K1 * K1 * K1 * pow(s, K1) * geo;
        };
        const Interval two_pi = 2L * pi(p);
        tail = 2L * special::zeta_int(2, p) / sqr(two_pi) * cubic_tail(X / two_pi);
        tail += A / 2L * cubic_tail(A * X) / Interval::integer(factorial(static_cast<int>(K1)), p);
        tail /= pow(X, 3L); // x^{n-k} <= X^n / X^3 for k <= 3
    }
};

// g^{(k)}(x), k = 0..3, from g = sum b_n x^n on 0 <= x <= kSeriesEdge.
Jet g_series(const GModel& g, const Interval& x)
{
    Interval out[4] = {Interval(g.p), Interval(g.p), Interval(g.p), Interval(g.p)};
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& cf = g.coef[k];
        for (auto it = cf.rbegin(); it != cf.rend(); ++it) {
            out[k] = out[k] * x + *it;
        }
        out[k].widen(g.tail);
    }
    return {out[0], out[1], out[2], out[3]};
}

Jet g_closed(const GModel& g, const Interval& x)
{
    const Interval one = Interval::point(1L, g.p);
    const Interval zero = Interval::point(0L, g.p);
    const Jet X{x, one, zero, zero};
    const Jet e_ax = exp((-g.A) * X);
    const Jet e_x = exp(-1L * one * X);
    const Jet denom = X * (constant_jet(one) - e_x);
    return e_ax / denom - constant_jet(one) / (X * X) - g.c * (e_ax / X);
}

Jet g_jet3(const GModel& g, const Interval& x)
{
    if (x.hi_up() <= kSeriesEdge) {
        return g_series(g, x);
    }
    if (x.lo_down() < kSeriesEdge) {
        throw UnsupportedArgument("g jet cell straddles the series edge");
    }
    return g_closed(g, x);
}

Interval cell(double a, double b, Precision p)
{
    return Interval::hull(Interval::point(a, p), Interval::point(b, p));
}

// Certify sign(g''(x)) == want on [a, b] by bisection. Returns false if some
// cell stays undecided at the depth limit or has the wrong sign.
bool certify_cell(const GModel& g, double a, double b, int want, int depth)
{
    const Interval d2 = g_jet3(g, cell(a, b, g.p)).d2;
    if ((want > 0 && d2.is_positive()) || (want < 0 && d2.is_negative())) {
        return true;
    }
    if ((want > 0 && d2.is_negative()) || (want < 0 && d2.is_positive()) || depth == 0) {
        return false;
    }
    const double m = 0.5 * (a + b);
    return certify_cell(g, a, m, want, depth - 1) && certify_cell(g, m, b, want, depth - 1);
}

// Seeds the bisection with cells of width <= 1/4 split at the series edge.
bool certify_sign(const GModel& g, double a, double b, int want)
{
    for (double x = a; x < b;) {
        double next = std::min(b, std::floor(x * 4.0 + 1.0) / 4.0);
        if (x < kSeriesEdge && next > kSeriesEdge) {
            next = kSeriesEdge;
        }
        if (!certify_cell(g, x, next, want, 24)) {
            return false;
        }
        x = next;
    }
    return true;
}

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w)
{
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::fabs(dz) < 1e-16) {
                break;
            }
        }
        x[static_cast<std::size_t>(i)] = z;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

constexpr double kSignHorizon = 200.0;

double quadrature_abs_g2(const GModel& g, std::optional<double> split)
{
    std::vector<double> breaks;
    for (double b = 0.0; b < 40.0; b += 0.5) {
        breaks.push_back(b);
    }
    for (double b = 40.0; b < kSignHorizon; b += 4.0) {
        breaks.push_back(b);
    }
    breaks.push_back(kSignHorizon);
    if (split) {
        breaks.push_back(*split);
        std::sort(breaks.begin(), breaks.end());
    }
    std::vector<double> gx;
    std::vector<double> gw;
    gauss_legendre(20, gx, gw);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i];
        const double b = breaks[i + 1];
        if (b - a < 1e-14) {
            continue;
        }
        double s = 0.0;
        for (std::size_t k = 0; k < gx.size(); ++k) {
            const double x = 0.5 * (a + b) + 0.5 * (b - a) * gx[k];
            s += gw[k] * std::fabs(g_jet3(g, Interval::point(x, g.p)).d2.mid());
        }
        total += 0.5 * (b - a) * s;
    }
    // g'' keeps one sign past the horizon, so the tail is |g'(horizon)|.
    return total + std::fabs(g_jet3(g, Interval::point(kSignHorizon, g.p)).d1.mid());
}

// Beyond the horizon g'' = h'' - 6/x^4 with |h''| <= 4 e^{-Ax}/x; this
// checks 4 e^{-A X} X^3 < 6 at X = horizon (the left side decreases for
// x > 3/A).
bool far_field_negative(const LaurentCoeffs& L, Precision p)
{
    const Interval X = Interval::point(kSignHorizon, p);
    const Interval lhs = 4L * cmm::exp(-(Interval::rational(L.A, p) * X)) * pow(X, 3L);
    return compare(lhs, Interval::point(6L, p)) == Ordering::CertainlyLess &&
           3.0 / L.A.get_d() < kSignHorizon;
}

} // namespace

GJet g_jet(int r, int t, const Interval& x)
{
    const Jet j = g_jet3(GModel(r, t, x.precision()), x);
    return {j.v, j.d1, j.d2};
}

JAnalysis analyze_j(int r, int t, Precision p)
{
    const GModel g(r, t, p);
    const LaurentCoeffs& L = g.L;
    // Point values for the quadrature and the bracket search need no more
    // than double accuracy.
    const GModel g_fast(r, t, Precision(64));
    JAnalysis out;
    out.r = r;
    out.t = t;
    out.g1_at_zero = L.b.at(1);
    const bool far = far_field_negative(L, p);
    const Interval b1 = Interval::rational(out.g1_at_zero, p);

    // Look for a sign change of g'' on a coarse grid of point values.
    std::optional<double> bracket_lo;
    double prev_x = 0.6;
    double prev = g_jet3(g_fast, Interval::point(prev_x, g_fast.p)).d2.mid();
    for (double x = 0.75; x <= kSignHorizon; x += 0.25) {
        const double cur = g_jet3(g_fast, Interval::point(x, g_fast.p)).d2.mid();
        if ((prev > 0) != (cur > 0)) {
            bracket_lo = prev_x;
            break;
        }
        prev = cur;
        prev_x = x;
    }

    if (!bracket_lo) {
        const int sign = g_jet3(g_fast, Interval::point(1.0, g_fast.p)).d2.mid() > 0 ? 1 : -1;
        out.sign_pattern_certified = far && sign < 0 && certify_sign(g_fast, 0.0, kSignHorizon, -1);
        // g'' < 0 throughout: J = g'(0) - g'(inf) = b_1.
        out.J = b1;
        out.J_quadrature = quadrature_abs_g2(g_fast, std::nullopt);
        return out;
    }

    // Bisection on certified point signs, endpoints kept as exact doubles
    // first and then refined in MPFR so the bracket reaches ~2^{-p}.
    Interval lo = Interval::point(*bracket_lo, p);
    Interval hi = Interval::point(*bracket_lo + 0.25, p);
    const bool lo_positive = g_jet3(g, lo).d2.is_positive();
    for (unsigned it = 0; it < p.bits() - 8; ++it) {
        Interval mid(p);
        mpfr_add(mid.lo_mut(), lo.lo(), hi.lo(), MPFR_RNDN);
        mpfr_div_2ui(mid.lo_mut(), mid.lo(), 1, MPFR_RNDN);
        mpfr_set(mid.hi_mut(), mid.lo(), MPFR_RNDN);
        const Interval d2 = g_jet3(g, mid).d2;
        if (!d2.is_positive() && !d2.is_negative()) {
            break;
        }
        if (d2.is_positive() == lo_positive) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const Interval alpha = Interval::span(lo, hi);
    out.alpha = alpha;

    // Uniqueness: g''' < 0 on a neighbourhood, fixed signs outside it.
    const double a_lo = alpha.lo_down() - 0.5;
    const double a_hi = alpha.hi_up() + 0.5;
    bool monotone_near = true;
    for (int i = 0; i < 64 && monotone_near; ++i) {
        const double c0 = a_lo + (a_hi - a_lo) * i / 64.0;
        const double c1 = a_lo + (a_hi - a_lo) * (i + 1) / 64.0;
        monotone_near = g_jet3(g_fast, cell(c0, c1, g_fast.p)).d3.is_negative();
    }
    out.sign_pattern_certified = lo_positive && far && monotone_near &&
                                 certify_sign(g_fast, 0.0, a_lo, +1) &&
                                 certify_sign(g_fast, a_hi, kSignHorizon, -1);

    const Interval g1a = g_jet3(g, alpha).d1;
    out.g1_at_alpha = g1a;
    // int_0^alpha g'' - int_alpha^inf g'' = 2 g'(alpha) - g'(0)
    out.J = 2L * g1a - b1;
    out.J_quadrature = quadrature_abs_g2(g_fast, alpha.mid());
    return out;
}

BoundReport j_g_quadrature(int r, int t, Precision p)
{
    const JAnalysis a = analyze_j(r, t, p);
    const Interval bound = Interval::rational(j_constant(r, t), p);
    BoundReport rep;
    if (a.alpha) {
        rep = make_report("J_g_" + std::to_string(r) + std::to_string(t), a.J, bound, Relation::Less);
        rep.with("alpha", a.alpha->str(12)).with("g1_at_alpha", a.g1_at_alpha->str(12));
    } else {
        rep = make_report("J_g_" + std::to_string(r) + std::to_string(t), a.J, bound, Relation::Overlaps);
        rep.with("J_exact", a.g1_at_zero.get_str());
    }
    if (!a.sign_pattern_certified) {
        rep.verdict = combine(rep.verdict, Verdict::Indeterminate);
        rep.note = "sign pattern of g'' not certified";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", a.J_quadrature);
    rep.with("J_quadrature", buf);
    return rep;
}

FExpansion f_expansion(int max_n, Precision p)
{
    const LaurentCoeffs L14 = brt_laurent(1, 4, std::max(max_n, 2));
    const LaurentCoeffs L34 = brt_laurent(3, 4, std::max(max_n, 2));
    const mpq_class one = 1;
    const mpq_class half(1, 2);
    FExpansion f;

    const Interval z1 = special::hurwitz_zeta2(one, p);
    const Interval zh = special::hurwitz_zeta2(half, p);
    f.alpha_m1 = 4L * (z1 / 16L + (z1 - zh) / 64L);

    const mpq_class c14 = L14.c.at(-1);
    const mpq_class c34 = L34.c.at(-1);
    f.alpha_log = -c14 - c34 / 2 + c34 / 2;

    const Interval g = constant(Constant::EulerGamma, p);
    const Interval l2 = constant(Constant::Log2, p);
    const Interval psi1 = special::digamma_at(one, p);
    const Interval psih = special::digamma_at(half, p);
    // 4z [beta14/(4z) - c14/(4z)(log 4z + g + psi(1)) + (1/(8z))(...)]; the
    // log z parts form alpha_log and the rest is the constant.
    f.alpha_0 = beta_rt(1, 4, p) - Interval::rational(c14, p) * (2L * l2 + g + psi1) -
                Interval::rational(c34 / 2, p) * (psi1 - psih);
    f.alpha_0_closed_form = beta_rt(1, 4, p) - (l2 + g) / 4L;

    // Power-series part: F_a^{r,t}(w) contributes -d_n w^n with
    // d_n = c*_n B_{n+1}(a)/(n+1); times 4z gives z^{n+1}.
    f.alpha.assign(static_cast<std::size_t>(max_n) + 1, 0);
    f.alpha_quoted.assign(static_cast<std::size_t>(max_n) + 1, 0);
    for (int n = 0; n + 1 <= max_n; ++n) {
        auto d = [&](const LaurentCoeffs& L, const mpq_class& a) -> mpq_class {
            return L.c_star.at(n) * bernoulli_polynomial(n + 1, a) / (n + 1);
        };
        mpz_class four_n;
        mpz_class eight_n;
        mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
        mpz_ui_pow_ui(eight_n.get_mpz_t(), 8, static_cast<unsigned long>(n));
        mpq_class v = -4 * (d(L14, one) * four_n + (d(L34, one) - d(L34, half)) * eight_n);
        v.canonicalize();
        f.alpha[static_cast<std::size_t>(n) + 1] = v;
    }
    f.alpha_1 = f.alpha[1];
    for (int m = 2; m <= max_n; ++m) {
        mpz_class six;
        mpz_ui_pow_ui(six.get_mpz_t(), 6, static_cast<unsigned long>(m - 1));
        const mpq_class bm1 = bernoulli_polynomial(m, one);
        mpq_class v = (bm1 + mpq_class(six) * (bernoulli_polynomial(m, half) - bm1)) /
                      mpq_class(4 * m * factorial(m));
        if (m % 2 == 1) {
            v = -v;
        }
        v.canonicalize();
        f.alpha_quoted[static_cast<std::size_t>(m)] = v;
    }
    return f;
}

std::vector<BoundReport> lemma_F_check(const std::vector<CInterval>& samples)
{
    std::vector<BoundReport> out;
    for (const auto& z : samples) {
        const Precision p = z.precision();
        const Interval az = abs(z);
        if (compare(az, pi(p) / 6L) != Ordering::CertainlyLess) {
            throw OutOfDisk("lemma_F_check needs |z| < pi/6");
        }
        const FExpansion f = f_expansion(2, p);
        const CInterval F = combined_F(z);
        const CInterval lz = log(z);
        auto residual = [&](const mpq_class& alpha_log, const Interval& alpha_0) {
            CInterval d = F - reciprocal(z) * f.alpha_m1 - lz * Interval::rational(alpha_log, p);
            d.re -= alpha_0;
            return abs(d);
        };
        const std::string where = z.re.str(6) + (z.is_real() ? "" : " + i " + z.im.str(6));
        BoundReport derived =
            make_report("lemma_F", residual(f.alpha_log, f.alpha_0), az / 2L, Relation::Less);
        derived.with("z", where).with("alpha_log", f.alpha_log.get_str()).with("alpha_0", f.alpha_0.str(10));
        out.push_back(std::move(derived));
        // The same inequality with the constants exactly as quoted.
        BoundReport quoted = make_report("lemma_F_quoted_constants", residual(mpq_class(1, 4), f.alpha_0_closed_form),
                                         az / 2L, Relation::Less);
        quoted.with("z", where).with("alpha_log", "1/4").with("alpha_0", f.alpha_0_closed_form.str(10));
        out.push_back(std::move(quoted));
    }
    return out;
}

} // namespace cmm::circle
