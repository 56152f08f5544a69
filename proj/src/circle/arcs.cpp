#include <algorithm>
#include <cmath>
#include <string>

#include "cmm/circle/circle.hpp"

namespace cmm::circle {

namespace {

long default_terms(double x)
{
    return std::max<long>(64, static_cast<long>(std::ceil(40.0 / x)));
}

// e^{-(M+1)x} / ((M+1)(1 - e^{-x})(1 - e^{-2x})) bounds the Log G tail.
Interval geometric_tail(const Interval& x, long M)
{
    const Interval ex = exp(-x);
    return exp(-(x * (M + 1))) / ((1L - ex) * (1L - sqr(ex)) * (M + 1));
}

bool on_major_arc(const CInterval& z)
{
    return z.re.is_positive() && compare(abs(z.im), 30L * z.re) == Ordering::CertainlyLess;
}

std::string show(const CInterval& z)
{
    return z.re.str(8) + " + " + z.im.str(8) + "i";
}

} // namespace

Interval log_G_tail(const Interval& x, long M)
{
    return geometric_tail(x, M);
}

CInterval log_G_direct(const CInterval& z, long M)
{
    const Precision p = z.precision();
    if (!z.re.is_positive()) {
        throw UnsupportedArgument("log_G_direct needs Re z > 0");
    }
    if (M <= 0) {
        M = default_terms(z.re.lo_down());
    }
    const CInterval one(Interval::point(1L, p));
    CInterval sum{Interval(p), Interval(p)};
    for (long m = 1; m <= M; ++m) {
        // Powers by repeated products would compound the rectangle
        // wrapping, so each q^m is taken from exp(-m z) directly.
        const CInterval qm = exp(-(z * m));
        const CInterval q2m = exp(-(z * (2 * m)));
        const CInterval den = (m % 2 == 1) ? one + q2m : one - q2m;
        sum += (qm / den) * Interval::rational(1, m, p);
    }
    const Interval t = geometric_tail(z.re, M);
    sum.re.widen(t);
    sum.im.widen(t);
    return sum;
}

BoundReport major_arc_check(const CInterval& z)
{
    const Precision p = z.precision();
    if (!on_major_arc(z)) {
        throw NotOnMajorArc("major arc needs 0 < |y| < 30x");
    }
    if (compare(z.re, Interval::rational(1, 20, p)) != Ordering::CertainlyLess) {
        throw NotOnMajorArc("major arc check needs x < 1/20");
    }
    const CInterval diff = log_G_direct(z) - combined_F(z);
    const Interval lhs = abs(diff);
    const Interval E = combined_E(z);
    BoundReport rep = make_report("major_arc", lhs, E, Relation::Less);
    const Interval strong = 7L * norm(z) / 5L;
    const Verdict strong_v = decide(lhs, strong, Relation::Less);
    rep.verdict = combine(rep.verdict, strong_v);
    rep.with("z", show(z)).with("seven_fifths_z_squared", strong.str(10)).with(
        "seven_fifths_verdict", std::string(to_string(strong_v)));
    return rep;
}

Interval re_log_G(const Interval& x, const Interval& y, long M)
{
    return log_G_direct(CInterval(x, y), M).re;
}

BoundReport minor_arc_sample(const Interval& x, const Interval& y)
{
    const Precision p = x.precision();
    if (compare(abs(y), 30L * x) == Ordering::CertainlyLess || compare(abs(y), pi(p)) != Ordering::CertainlyLess) {
        throw UnsupportedArgument("minor arc sample needs 30x <= |y| < pi");
    }
    BoundReport rep = make_report("minor_arc_sample", re_log_G(x, y), 1L / (5L * x), Relation::Less);
    rep.advisory = true;
    rep.note = "sampled point; not a continuous-in-y certificate";
    rep.with("x", x.str(8)).with("y", y.str(8));
    return rep;
}

std::vector<std::pair<int, mpq_class>> paper_alpha_squares()
{
    return {{1, 3508}, {2, 13200}, {3, 27000}, {4, 40000}, {5, 55000}};
}

namespace {

constexpr int kTaylorDegree = 8;

// f(x) = 1 - 2 cos(60 m x) e^{-2mx} + e^{-4mx} = sum_k d_k x^k with
// d_k = (-2 Re(w^k) + (-4m)^k) / k!, w = m(-2 + 60i); d_0 = d_1 = 0.
std::vector<mpq_class> alpha_taylor(int m)
{
    std::vector<mpq_class> d(kTaylorDegree + 1, 0);
    mpz_class wr = 1;
    mpz_class wi = 0;
    mpz_class four = 1;
    mpz_class fact = 1;
    for (int k = 1; k <= kTaylorDegree; ++k) {
        const mpz_class nr = wr * (-2 * m) - wi * (60 * m);
        const mpz_class ni = wr * (60 * m) + wi * (-2 * m);
        wr = nr;
        wi = ni;
        four *= -4 * m;
        fact *= k;
        d[static_cast<std::size_t>(k)] = mpq_class(-2 * wr + four, fact);
        d[static_cast<std::size_t>(k)].canonicalize();
    }
    return d;
}

// Lower enclosure of f(x)/x^2 - alpha^2 over a cell, Taylor part plus the
// degree >= 9 remainder (2|w|^9 + (4m)^9)/9! x^7 / (1 - |w| x / 10).
Interval taylor_margin(const std::vector<mpq_class>& d, int m, const Interval& alpha2, const Interval& x)
{
    const Precision p = x.precision();
    Interval poly(p);
    for (int k = kTaylorDegree; k >= 2; --k) {
        poly = poly * x + Interval::rational(d[static_cast<std::size_t>(k)], p);
    }
    const Interval xa = abs(x);
    const Interval wabs = m * sqrt(Interval::point(3604L, p));
    Interval rem = (2L * pow(wabs, 9L) + pow(Interval::point(4L * m, p), 9L)) / 362880L * pow(xa, 7L);
    rem /= 1L - wabs * xa / 10L;
    poly.widen(rem);
    return poly - alpha2;
}

// Direct evaluation at a single point, independent of the Taylor model.
Interval direct_margin(int m, const Interval& alpha2, const Interval& x)
{
    const Interval f = 1L - 2L * cos(60L * m * x) * exp(-(2L * m) * x) + exp(-(4L * m) * x);
    return f / sqr(x) - alpha2;
}

} // namespace

BoundReport alpha_m_verify(int m, const mpq_class& alpha_squared, Precision p)
{
    if (m < 1 || m > 5 || alpha_squared <= 0) {
        throw UnsupportedArgument("alpha_m_verify needs 1 <= m <= 5 and alpha > 0");
    }
    const auto d = alpha_taylor(m);
    const Interval alpha2 = Interval::rational(alpha_squared, p);
    const Interval x_max = pi(p) / 480L;

    // Work over dyadic cells of [0, X] with X >= pi/480, X a double.
    const double X = x_max.hi_up();
    struct Cell {
        double a;
        double b;
        int depth;
    };
    std::vector<Cell> todo{{0.0, X, 0}};
    Interval worst = Interval::point(0L, p);
    bool have_worst = false;
    long cells = 0;
    Verdict verdict = Verdict::Verified;
    std::optional<double> witness;
    while (!todo.empty()) {
        const Cell c = todo.back();
        todo.pop_back();
        const Interval x = Interval::hull(Interval::point(c.a, p), Interval::point(c.b, p));
        const Interval margin = taylor_margin(d, m, alpha2, x);
        if (margin.is_positive()) {
            ++cells;
            if (!have_worst || margin.lo_down() < worst.lo_down()) {
                worst = margin;
                have_worst = true;
            }
            continue;
        }
        const double mid = 0.5 * (c.a + c.b);
        if (mid > 0.0 && mid < x_max.lo_down() && direct_margin(m, alpha2, Interval::point(mid, p)).is_negative()) {
            verdict = Verdict::Failed;
            witness = mid;
            break;
        }
        if (c.depth >= 40) {
            verdict = Verdict::Indeterminate;
            break;
        }
        todo.push_back({c.a, mid, c.depth + 1});
        todo.push_back({mid, c.b, c.depth + 1});
    }
    BoundReport rep;
    rep.claim_id = "alpha_m_" + std::to_string(m);
    rep.relation = Relation::Greater;
    rep.rhs = Interval::point(0L, p);
    rep.lhs = have_worst ? worst : Interval::point(0L, p);
    rep.verdict = verdict;
    rep.with("m", std::to_string(m)).with("alpha_squared", alpha_squared.get_str()).with("cells", std::to_string(cells));
    if (witness) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", *witness);
        rep.lhs = direct_margin(m, alpha2, Interval::point(*witness, p));
        rep.with("counterexample_x", buf);
    }
    return rep;
}

namespace {

Interval minor_arc_term(int m, const mpq_class& alpha_squared, Precision p)
{
    const Interval alpha = sqrt(Interval::rational(alpha_squared, p));
    const Interval c = cos(pi(p) * m / 12L) * exp(-(pi(p) * m / 480L));
    return c * (2L * m / alpha - 1L) / (2L * m * m);
}

} // namespace

Interval minor_arc_constant(Precision p)
{
    Interval s = sqr(pi(p)) / 12L;
    for (const auto& [m, a2] : paper_alpha_squares()) {
        s += minor_arc_term(m, a2, p);
    }
    return s;
}

BoundReport minor_arc_final_constant(Precision p)
{
    BoundReport rep =
        make_report("minor_arc_constant", minor_arc_constant(p), Interval::rational(1, 5, p), Relation::Less);
    Interval mags = Interval::point(0L, p);
    bool all_negative = true;
    for (const auto& [m, a2] : paper_alpha_squares()) {
        const Interval t = minor_arc_term(m, a2, p);
        all_negative = all_negative && t.is_negative();
        mags += abs(t);
    }
    rep.with("sum_of_magnitudes", mags.str(8)).with("summands_negative", all_negative ? "true" : "false");
    if (!all_negative) {
        rep.verdict = combine(rep.verdict, Verdict::Failed);
    }
    return rep;
}

Interval log_P(const Interval& q, long M)
{
    const Precision p = q.precision();
    if (!q.is_positive() || compare(q, Interval::point(1L, p)) != Ordering::CertainlyLess) {
        throw UnsupportedArgument("log_P needs 0 < q < 1");
    }
    if (M <= 0) {
        // q^M below 2^{-bits-16}
        const double lq = -std::log(q.hi_up());
        M = std::clamp<long>(static_cast<long>(std::ceil((p.bits() + 16) * std::log(2.0) / lq)), 8, 1L << 22);
    }
    Interval s(p);
    Interval qm = Interval::point(1L, p);
    for (long m = 1; m <= M; ++m) {
        qm *= q;
        s += qm / ((1L - qm) * m);
    }
    // sum_{m>M} q^m / (m (1 - q^m)) <= q^{M+1} / ((M+1)(1-q)^2)
    s.widen(pow(q, M + 1) / (sqr(1L - q) * (M + 1)));
    return s;
}

Interval eta_transform_rhs(const Interval& x)
{
    const Precision p = x.precision();
    const Interval pi2 = sqr(pi(p));
    const Interval l2 = constant(Constant::Log2, p);
    return pi2 / (12L * x) - l2 / 2L + x / 24L + log_P(exp(-(4L * pi2 / x))) - log_P(exp(-(2L * pi2 / x)));
}

BoundReport eta_transform_bound(const Interval& x)
{
    const Precision p = x.precision();
    if (!x.is_positive() || compare(x, pi(p) / 480L) == Ordering::CertainlyGreater) {
        throw UnsupportedArgument("eta transform bound needs 0 < x <= pi/480");
    }
    const Interval pi2 = sqr(pi(p));
    const Interval correction = x / 24L - constant(Constant::Log2, p) / 2L +
                                log_P(exp(-(4L * pi2 / x))) - log_P(exp(-(2L * pi2 / x)));
    BoundReport rep = make_report("eta_transform", correction, Interval::point(0L, p), Relation::Less);
    rep.with("x", x.str(8)).with("rhs", eta_transform_rhs(x).str(12));
    return rep;
}

} // namespace cmm::circle
