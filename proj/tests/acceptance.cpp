// One pass/fail line per acceptance criterion. Usage: acceptance --criterion N
// (or no arguments for all of them). Exit status 0 iff every selected
// criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "cmm/circle/circle.hpp"
#include "cmm/seaweed/meander.hpp"
#include "cmm/series/qseries.hpp"
#include "cmm/special/bernoulli.hpp"
#include "cmm/special/functions.hpp"
#include "oracles.hpp"

using namespace cmm;

namespace {

// Tolerances and targets, fixed here and nowhere else.
constexpr std::size_t kCoefficientOrder = 10000;
constexpr double kCoefficientSeconds = 60.0;
constexpr int kIndexMax = 60;
constexpr double kIndexSeconds = 60.0;
constexpr long kScanLo = 2000;
constexpr long kScanHi = 100000;
constexpr long kExpectedThreshold = 2322;
constexpr double kScanSeconds = 600.0;
constexpr const char* kMinorLo = "0.1988";
constexpr const char* kMinorHi = "0.1998";
constexpr const char* kAlpha0 = "0.051493";
constexpr double kAlpha0Width = 1e-6;
constexpr double kJQuadratureTol = 1e-6;
constexpr double kAlphaLo = 15.45;
constexpr double kAlphaHi = 15.46;
constexpr int kFuzzSamples = 10000;
constexpr int kLehmerMaxN = 12;
constexpr int kLehmerGrid = 100;
constexpr int kCalibrationMaxN = 50;
constexpr const char* kGap = "0.012386";

// A k-digit decimal d is matched when the enclosure meets [d - 10^-k, d + 10^-k].
bool matches_decimal(const Interval& x, const char* d)
{
    const char* dot = std::strchr(d, '.');
    const int k = dot ? static_cast<int>(std::strlen(dot + 1)) : 0;
    Interval target = Interval::decimal(d);
    target.widen(Interval::decimal("1e-" + std::to_string(k)));
    return x.overlaps(target);
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome coefficient_nonnegativity()
{
    const auto t0 = std::chrono::steady_clock::now();
    const series::QSeries g = series::expand_G(kCoefficientOrder);
    const auto scan = series::scan_nonnegative(g);
    const double s = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "order=%zu first_negative=%s seconds=%.1f (limit %.0f)", kCoefficientOrder,
                  scan.first_negative ? std::to_string(*scan.first_negative).c_str() : "none", s,
                  kCoefficientSeconds);
    return {scan.all_nonnegative() && s < kCoefficientSeconds, buf};
}

Outcome initial_coefficients()
{
    const std::vector<long> want{1, 1, 1, 0, 0, 1, 2, 1};
    const series::QSeries g = series::expand_G(7);
    const auto brute = oracle::signed_partition_counts(7);
    bool ok = true;
    std::string got;
    for (std::size_t n = 0; n < want.size(); ++n) {
        ok = ok && g[n] == want[n] && brute[n] == want[n];
        got += (n ? " " : "") + g[n].get_str();
    }
    return {ok, "expand_G(7) = [" + got + "], brute-force oracle agrees: " + (ok ? "yes" : "no")};
}

Outcome index_parity()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = seaweed::verify_part2(kIndexMax);
    const double s = seconds_since(t0);
    int matched = 0;
    for (const auto& r : rows) {
        matched += r.match;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "|e_n - o_n| = a(n) for %d of %d n, seconds=%.1f (limit %.0f)", matched, kIndexMax,
                  s, kIndexSeconds);
    return {matched == kIndexMax && static_cast<int>(rows.size()) == kIndexMax && s < kIndexSeconds, buf};
}

Outcome threshold()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto scan = circle::threshold_scan(kScanLo, kScanHi);
    const double s = seconds_since(t0);
    const long thr = scan.threshold.value_or(-1);
    long failed_above_claim = 0;
    for (long n : scan.failures) {
        failed_above_claim += n > kExpectedThreshold;
    }
    std::string above;
    for (long n : scan.failures) {
        if (n > kExpectedThreshold) {
            above += " " + std::to_string(n);
        }
    }
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "largest failing n=%ld (expected %ld), failures above %ld:%s, undecided=%ld, "
                  "verified above threshold=%s, seconds=%.1f",
                  thr, kExpectedThreshold, kExpectedThreshold, above.empty() ? " none" : above.c_str(),
                  scan.indeterminate, scan.verified_above_threshold ? "yes" : "no", s);
    return {thr == kExpectedThreshold && failed_above_claim == 0 && scan.verified_above_threshold &&
                s < kScanSeconds,
            buf};
}

Outcome minor_arc_constant()
{
    const BoundReport r = circle::minor_arc_final_constant();
    const Interval window = Interval::hull(Interval::decimal(kMinorLo), Interval::decimal(kMinorHi));
    const bool in_window = r.lhs.overlaps(window);
    return {in_window && r.verdict == Verdict::Verified,
            "constant=" + r.lhs.str(10) + " in [" + kMinorLo + ", " + kMinorHi + "]: " + (in_window ? "yes" : "no") +
                ", below 1/5: " + std::string(to_string(r.verdict))};
}

Outcome f_constants()
{
    const circle::FExpansion f = circle::f_expansion(2);
    const Interval& a0 = f.alpha_0_closed_form;
    const bool a0_ok = matches_decimal(a0, kAlpha0) && a0.width() <= kAlpha0Width;
    const bool a1_ok = f.alpha_1 == mpq_class(-1, 96);
    return {a0_ok && a1_ok, "alpha_0 (closed form)=" + a0.str(10) + " matches " + kAlpha0 + ": " +
                                (a0_ok ? "yes" : "no") + "; alpha_0 implied by F=" + f.alpha_0.str(10) +
                                "; alpha_1=" + f.alpha_1.get_str() + " (expected -1/96)"};
}

Outcome j_constants()
{
    const circle::JAnalysis j34 = circle::analyze_j(3, 4);
    const circle::JAnalysis j14 = circle::analyze_j(1, 4);
    const mpq_class five64(5, 64);
    const bool exact34 = j34.g1_at_zero == five64 && j34.J.contains(five64) && j34.sign_pattern_certified;
    const bool quad34 = std::abs(j34.J_quadrature - five64.get_d()) < kJQuadratureTol;
    const bool bound14 = compare(j14.J, Interval::rational(circle::j_constant(1, 4))) == Ordering::CertainlyLess &&
                         j14.sign_pattern_certified;
    const bool alpha14 =
        j14.alpha && j14.alpha->lo_down() >= kAlphaLo && j14.alpha->hi_up() <= kAlphaHi;
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "J34=b_1=%s exact: %s, quadrature=%.10f; J14=%s < 649/40000: %s, alpha=%s in [%.2f, %.2f]: %s",
                  j34.g1_at_zero.get_str().c_str(), exact34 ? "yes" : "no", j34.J_quadrature, j14.J.str(10).c_str(),
                  bound14 ? "yes" : "no", j14.alpha ? j14.alpha->str(10).c_str() : "none", kAlphaLo, kAlphaHi,
                  alpha14 ? "yes" : "no");
    return {exact34 && quad34 && bound14 && alpha14, buf};
}

Outcome alpha_m()
{
    bool ok = true;
    std::string detail;
    for (const auto& [m, a2] : circle::paper_alpha_squares()) {
        const BoundReport r = circle::alpha_m_verify(m, a2);
        ok = ok && r.verdict == Verdict::Verified;
        detail += "m=" + std::to_string(m) + ":" + std::string(to_string(r.verdict)) + " ";
    }
    return {ok, detail};
}

Outcome property_suites()
{
    int brt = 0;
    for (const auto& [r, t] : {std::pair{1, 4}, std::pair{3, 4}}) {
        for (const auto& a : {mpq_class(1), mpq_class(1, 2)}) {
            for (const auto& z : {mpq_class(1, 10), mpq_class(1, 2), mpq_class(1)}) {
                brt += circle::lemma_brt_instance(a, r, t, z).verdict == Verdict::Verified;
            }
        }
    }
    int ha = 0;
    for (const auto& a : {mpq_class(1), mpq_class(1, 2)}) {
        for (const auto& x : {mpq_class(1, 10), mpq_class(1, 2), mpq_class(1), mpq_class(2), mpq_class(3)}) {
            ha += special::h_a_identity_check(a, x).verdict == Verdict::Verified;
        }
    }
    long lehmer_violations = 0;
    for (int n = 2; n <= kLehmerMaxN; ++n) {
        const Interval bound = special::lehmer_bound(n);
        for (int k = 0; k < kLehmerGrid; ++k) {
            const mpq_class x(k, kLehmerGrid - 1);
            const Interval v = abs(Interval::rational(special::bernoulli_polynomial(n, x)));
            lehmer_violations += v.hi_up() > bound.hi_up();
        }
    }
    const long fuzz = oracle::containment_violations(kFuzzSamples, 977);
    int calibration = 0;
    for (int n = 1; n <= kCalibrationMaxN; ++n) {
        calibration += seaweed::seaweed_index(seaweed::build_meander({{n}}, {{n}})) == n;
    }
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "B_rt instances %d/12, H_a points %d/10, Lehmer violations %ld, containment violations %ld/%d, "
                  "gl(n) calibration %d/%d",
                  brt, ha, lehmer_violations, fuzz, kFuzzSamples, calibration, kCalibrationMaxN);
    return {brt == 12 && ha == 10 && lehmer_violations == 0 && fuzz == 0 && calibration == kCalibrationMaxN, buf};
}

Outcome exponent_gap()
{
    const BoundReport r = circle::exponent_gap_report();
    const bool contains = matches_decimal(r.lhs, kGap);
    return {contains && r.verdict == Verdict::Verified, "gap=" + r.lhs.str(10) + " matches " + kGap + ": " +
                                                            (contains ? "yes" : "no") +
                                                            ", > 1/100: " + std::string(to_string(r.verdict))};
}

const std::vector<std::pair<const char*, std::function<Outcome()>>>& criteria()
{
    static const std::vector<std::pair<const char*, std::function<Outcome()>>> all{
        {"coefficient non-negativity to order 10000", coefficient_nonnegativity},
        {"initial coefficients", initial_coefficients},
        {"seaweed index parity equals a(n) for n <= 60", index_parity},
        {"final inequality threshold", threshold},
        {"minor-arc constant", minor_arc_constant},
        {"F expansion constants", f_constants},
        {"J constants", j_constants},
        {"alpha_m positivity", alpha_m},
        {"property suites", property_suites},
        {"exponent gap", exponent_gap},
    };
    return all;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N]...\n");
            return 3;
        }
    }
    if (selected.empty()) {
        for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) {
            selected.push_back(i);
        }
    }
    bool all = true;
    for (int id : selected) {
        if (id < 1 || id > static_cast<int>(criteria().size())) {
            std::fprintf(stderr, "no criterion %d\n", id);
            return 3;
        }
        const auto& [name, run] = criteria()[static_cast<std::size_t>(id - 1)];
        Outcome o{false, ""};
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %d %s: %s | %s\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
