#include <algorithm>
#include <string>

#include <omp.h>

#include "cmm/circle/circle.hpp"
#include "cmm/special/functions.hpp"

namespace cmm::circle {

Interval error_budget_E(long n, Precision p)
{
    if (n < 1) {
        throw UnsupportedArgument("error budget needs n >= 1");
    }
    const Interval N = Interval::point(n, p);
    const Interval rn = sqrt(N);
    const Interval pi_ = pi(p);
    const Interval s3 = sqrt(Interval::point(3L, p));
    const Interval pi2 = sqr(pi_);

    const Interval minor_exp = (pi_ / (4L * s3) + 4L * s3 / (5L * pi_)) * rn;
    const Interval first = 21L * pi2 / (40L * sqrt(3L * N)) * exp(minor_exp);

    const Interval major_exp = pi_ / (2L * s3) * rn + pi_ * sqrt(Interval::point(901L, p)) / (8L * sqrt(3L * N)) +
                               217L * pi2 / (240L * N);
    const Interval second = Interval::rational(567, 200, p) / pow(N, Interval::rational(5, 8, p)) * exp(major_exp);
    return first + second;
}

namespace {

BoundReport final_reduction_once(long n, Precision p)
{
    const Interval N = Interval::point(n, p);
    const Interval arg = pi(p) / 2L * sqrt(N / 3L);
    const Interval lhs = special::bessel_I_m34(arg);
    const Interval rhs = error_budget_E(n, p) + exp(arg) / (5L * pow(N, Interval::rational(7, 8, p)));
    BoundReport rep = make_report("final_reduction", lhs, rhs, Relation::Greater);
    rep.with("n", std::to_string(n)).with("precision_bits", std::to_string(p.bits()));
    return rep;
}

} // namespace

BoundReport final_reduction_check(long n, Precision p, bool refine)
{
    BoundReport rep = final_reduction_once(n, p);
    while (refine && rep.verdict == Verdict::Indeterminate && p.bits() < Precision::kRefinementCeiling) {
        p = Precision(std::min(p.bits() * 2, Precision::kRefinementCeiling));
        rep = final_reduction_once(n, p);
    }
    return rep;
}

Verdict final_reduction_verdict(long n, Precision p)
{
    return final_reduction_check(n, p, true).verdict;
}

namespace {

ThresholdScan summarize(long lo, long hi, const std::vector<Verdict>& v)
{
    ThresholdScan s;
    s.lo = lo;
    s.hi = hi;
    for (long n = lo; n <= hi; ++n) {
        switch (v[static_cast<std::size_t>(n - lo)]) {
        case Verdict::Verified:
            ++s.verified;
            break;
        case Verdict::Failed:
            ++s.failed;
            s.failures.push_back(n);
            break;
        default:
            ++s.indeterminate;
            s.indeterminates.push_back(n);
            break;
        }
    }
    if (!s.failures.empty()) {
        s.threshold = s.failures.back();
    }
    const long from = s.threshold ? *s.threshold + 1 : lo;
    s.verified_above_threshold = std::none_of(s.indeterminates.begin(), s.indeterminates.end(),
                                              [from](long n) { return n >= from; });
    return s;
}

void check_range(long lo, long hi)
{
    if (lo < 1 || hi < lo) {
        throw UnsupportedArgument("threshold scan needs 1 <= lo <= hi");
    }
}

} // namespace

ThresholdScan threshold_scan(long lo, long hi, int jobs, Precision p)
{
    check_range(lo, hi);
    std::vector<Verdict> v(static_cast<std::size_t>(hi - lo + 1), Verdict::Indeterminate);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
    for (long n = lo; n <= hi; ++n) {
        Verdict out = Verdict::Indeterminate;
        try {
            out = final_reduction_verdict(n, p);
        } catch (const Error&) {
            out = Verdict::Indeterminate;
        }
        v[static_cast<std::size_t>(n - lo)] = out;
    }
    return summarize(lo, hi, v);
}

ThresholdScan threshold_scan_serial(long lo, long hi, Precision p)
{
    check_range(lo, hi);
    std::vector<Verdict> v;
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long n = lo; n <= hi; ++n) {
        v.push_back(final_reduction_verdict(n, p));
    }
    return summarize(lo, hi, v);
}

Interval exponent_gap(Precision p)
{
    const Interval pi_ = pi(p);
    const Interval s3 = sqrt(Interval::point(3L, p));
    return pi_ / (2L * s3) - pi_ / (4L * s3) - 4L * s3 / (5L * pi_);
}

BoundReport exponent_gap_report(Precision p)
{
    BoundReport rep = make_report("exponent_gap", exponent_gap(p), Interval::rational(1, 100, p), Relation::Greater);
    rep.advisory = true;
    rep.note = "the gap is rigorous; stability of the final inequality past the scan range is heuristic";
    rep.with("gap_times_sqrt_n", "exponents differ by at least 0.0123 sqrt(n)");
    return rep;
}

} // namespace cmm::circle
