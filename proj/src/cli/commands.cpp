#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmm/cli/cli.hpp"
#include "cmm/seaweed/meander.hpp"
#include "cmm/series/cache.hpp"
#include "cmm/series/qseries.hpp"
#include "cmm/special/functions.hpp"

namespace cmm::cli {

int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::Verified:
    case Verdict::Skipped:
        return kExitVerified;
    case Verdict::Failed:
        return kExitFailed;
    case Verdict::Indeterminate:
        break;
    }
    return kExitIndeterminate;
}

namespace {

std::string line(const BoundReport& r)
{
    std::ostringstream os;
    os << r.claim_id << ": " << to_string(r.verdict) << "  lhs=" << r.lhs.str(12) << "  rhs=" << r.rhs.str(12);
    for (const auto& [k, v] : r.metadata) {
        os << "  " << k << "=" << v;
    }
    if (r.advisory) {
        os << "  [advisory]";
    }
    if (!r.note.empty()) {
        os << "  (" << r.note << ")";
    }
    return os.str();
}

CInterval cpoint(double x, double y, Precision p)
{
    return {Interval::point(x, p), Interval::point(y, p)};
}

} // namespace

std::vector<BoundReport> lemma_suite(Precision p)
{
    using namespace circle;
    std::vector<BoundReport> out;
    const mpq_class one = 1;
    const mpq_class half(1, 2);
    const std::vector<mpq_class> zs{mpq_class(1, 10), mpq_class(1, 2), mpq_class(1)};
    const std::vector<std::pair<int, int>> rts{{1, 4}, {3, 4}};

    for (const auto& [r, t] : rts) {
        for (const auto& a : {one, half}) {
            for (const auto& z : zs) {
                out.push_back(lemma_brt_instance(a, r, t, z, p));
            }
        }
        for (const auto& z : zs) {
            out.push_back(laurent_consistency(r, t, z, p));
        }
        for (const auto& a : {one, half}) {
            for (const long k : {20L, 5L}) { // |z| = 1/20, 1/5
                out.push_back(e_bounds_check(a, r, t, Interval::rational(1, k, p)));
            }
        }
    }

    for (const auto& a : {one, half}) {
        for (const auto& x : {mpq_class(1, 10), mpq_class(1, 4), mpq_class(1, 2), mpq_class(1), mpq_class(2)}) {
            out.push_back(special::h_a_identity_check(a, x, p));
        }
    }

    out.push_back(j_g_quadrature(1, 4, p));
    out.push_back(j_g_quadrature(3, 4, p));

    const FExpansion f = f_expansion(2, p);
    BoundReport a0 = make_report("alpha_0_closed_form", f.alpha_0_closed_form, Interval::decimal("0.051493", p),
                                 Relation::Overlaps);
    // A stated k-digit decimal is matched within one unit of its last digit.
    a0.rhs.widen(Interval::decimal("0.000001", p));
    a0.verdict = decide(a0.lhs, a0.rhs, Relation::Overlaps);
    a0.with("alpha_0_from_F", f.alpha_0.str(10));
    out.push_back(std::move(a0));
    BoundReport a1 = make_report("alpha_1", Interval::rational(f.alpha_1, p), Interval::rational(-1, 96, p),
                                 Relation::Overlaps);
    a1.with("alpha_1", f.alpha_1.get_str()).with("quoted", "-1/96");
    out.push_back(std::move(a1));
    for (auto& r : lemma_F_check({cpoint(0.1, 0.0, p), cpoint(0.05, 0.3, p), cpoint(0.2, -0.2, p)})) {
        out.push_back(std::move(r));
    }

    for (const double x : {0.002, 0.005, 0.01}) {
        for (const double ratio : {0.5, 4.0, 8.0, 12.0, 16.0, 20.0, 24.0}) {
            if (x == 0.01 && ratio == 24.0) {
                continue; // twenty points in all
            }
            out.push_back(major_arc_check(cpoint(x, ratio * x, p)));
        }
    }

    for (const auto& [m, a2] : paper_alpha_squares()) {
        out.push_back(alpha_m_verify(m, a2, p));
    }
    out.push_back(minor_arc_final_constant(p));
    for (int k = 1; k <= 10; ++k) {
        // x = k pi / 4800, spread over (0, pi/480]
        out.push_back(eta_transform_bound(pi(p) * k / 4800L));
    }
    for (const double y : {0.5, 1.5, 3.0}) {
        out.push_back(minor_arc_sample(Interval::point(0.005, p), Interval::point(y, p)));
    }
    out.push_back(exponent_gap_report(p));
    return out;
}

Verdict scan_verdict(const circle::ThresholdScan& s)
{
    const bool failed_above = std::any_of(s.failures.begin(), s.failures.end(),
                                          [](long n) { return n > kClaimedThreshold; });
    if (failed_above) {
        return Verdict::Failed;
    }
    return s.verified_above_threshold ? Verdict::Verified : Verdict::Indeterminate;
}

int cmd_expand(std::size_t order, const std::optional<std::filesystem::path>& out, bool text, std::ostream& os)
{
    series::QSeries g;
    if (text) {
        g = series::expand_G(order);
        std::ostringstream body;
        for (std::size_t n = 0; n <= order; ++n) {
            body << (n ? " " : "") << g[n].get_str();
        }
        body << '\n';
        if (out) {
            std::ofstream f(*out);
            if (!(f << body.str())) {
                throw IoError("cannot write " + out->string());
            }
        } else {
            os << body.str();
        }
    } else if (out) {
        g = series::expand_G(order);
        series::write_cache(*out, g);
        os << "wrote " << out->string() << '\n';
    } else {
        auto cached = series::expand_G_cached(order);
        g = std::move(cached.series);
        os << (cached.found == series::CacheStatus::Loaded ? "loaded " : "wrote ")
           << series::g_cache_path(order).string() << '\n';
    }
    const auto scan = series::scan_nonnegative(g);
    if (scan.all_nonnegative()) {
        if (!text || out) {
            os << "AllNonNegative up to order " << order << '\n';
        }
        return kExitVerified;
    }
    os << "first negative coefficient at n=" << *scan.first_negative << '\n';
    return kExitFailed;
}

int cmd_verify_index(int max_n, std::ostream& os)
{
    if (max_n < 1) {
        throw UnsupportedArguments("verify-index needs --max >= 1");
    }
    const auto rows = seaweed::verify_part2(max_n);
    bool ok = true;
    char buf[128];
    os << "    n          e_n          o_n   |e-o|     a(n)\n";
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%5d %12lld %12lld %7lld %8lld  %s\n", r.n, static_cast<long long>(r.e),
                      static_cast<long long>(r.o), static_cast<long long>(std::llabs(r.e - r.o)),
                      static_cast<long long>(r.a), r.match ? "match" : "MISMATCH");
        os << buf;
        ok = ok && r.match;
    }
    os << (ok ? "all match" : "mismatch found") << '\n';
    return ok ? kExitVerified : kExitFailed;
}

int cmd_check_lemmas(Precision p, std::ostream& os)
{
    Verdict all = Verdict::Verified;
    long counts[4] = {0, 0, 0, 0};
    for (const auto& r : lemma_suite(p)) {
        os << line(r) << '\n';
        all = combine(all, r.verdict);
        ++counts[static_cast<int>(r.verdict)];
    }
    os << "verified=" << counts[0] << " failed=" << counts[1] << " indeterminate=" << counts[2] << '\n';
    return exit_code(all);
}

int cmd_threshold(long lo, long hi, int jobs, Precision p, std::ostream& os)
{
    const auto s = circle::threshold_scan(lo, hi, jobs, p);
    if (s.threshold) {
        os << "threshold=" << *s.threshold << ", operative cutoff=" << std::max(*s.threshold, kMinorArcCutoff)
           << '\n';
    } else {
        os << "no failures in range\n";
    }
    os << "range=" << lo << ":" << hi << " verified=" << s.verified << " failed=" << s.failed
       << " indeterminate=" << s.indeterminate << '\n';
    if (!s.indeterminates.empty()) {
        os << "undecided n:";
        for (long n : s.indeterminates) {
            os << ' ' << n;
        }
        os << '\n';
    }
    return exit_code(scan_verdict(s));
}

std::pair<long, long> parse_range(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UnsupportedArguments("range must look like lo:hi");
    }
    try {
        std::size_t used = 0;
        const long lo = std::stol(text.substr(0, colon), &used);
        if (used != colon) {
            throw UnsupportedArguments("bad range start");
        }
        const std::string rest = text.substr(colon + 1);
        const long hi = std::stol(rest, &used);
        if (used != rest.size() || lo < 1 || hi <= lo) {
            throw UnsupportedArguments("range needs 1 <= lo < hi");
        }
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UnsupportedArguments("range must look like lo:hi");
    }
}

int run(int argc, char** argv)
{
    CLI::App app{"Rigorous checks for the non-negativity of the coefficients of G(q)"};
    app.require_subcommand(1);

    std::size_t order = 10000;
    int max_n = 60;
    std::string range = "2000:100000";
    unsigned bits = Precision::kDefaultBits;
    int jobs = 0;
    std::string out;
    bool text = false;
    bool skip_index = false;

    auto* expand = app.add_subcommand("expand", "Expand G(q) and check its coefficients");
    expand->add_option("--order", order, "Truncation order")->required();
    expand->add_option("--out", out, "Output file");
    expand->add_flag("--text", text, "Decimal text instead of the binary cache format");

    auto* index = app.add_subcommand("verify-index", "Compare seaweed index parity counts with a(n)");
    index->add_option("--max", max_n, "Largest n")->required();

    auto* lemmas = app.add_subcommand("check-lemmas", "Run every analytic bound check");
    lemmas->add_option("--precision", bits, "Working precision in bits");

    auto* threshold = app.add_subcommand("threshold", "Scan the final inequality over a range of n");
    threshold->add_option("--range", range, "lo:hi");
    threshold->add_option("--jobs", jobs, "Worker threads (0 = default)");
    threshold->add_option("--precision", bits, "Starting precision in bits");

    auto* cert = app.add_subcommand("certificate", "Run the full pipeline and write a JSON certificate");
    cert->add_option("--out", out, "Certificate path")->required();
    cert->add_option("--precision", bits, "Working precision in bits");
    cert->add_option("--jobs", jobs, "Worker threads (0 = default)");
    cert->add_option("--order", order, "Coefficient check order");
    cert->add_option("--max", max_n, "Index check bound");
    cert->add_option("--range", range, "Threshold scan range lo:hi");
    cert->add_flag("--skip-index", skip_index, "Omit the seaweed index section");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        const Precision p(bits);
        if (*expand) {
            return cmd_expand(order, out.empty() ? std::nullopt : std::optional<std::filesystem::path>(out), text,
                              std::cout);
        }
        if (*index) {
            return cmd_verify_index(max_n, std::cout);
        }
        if (*lemmas) {
            return cmd_check_lemmas(p, std::cout);
        }
        if (*threshold) {
            const auto [lo, hi] = parse_range(range);
            return cmd_threshold(lo, hi, jobs, p, std::cout);
        }
        CertificateOptions opt;
        opt.precision = p;
        opt.coefficient_order = order;
        opt.index_max = max_n;
        std::tie(opt.scan_lo, opt.scan_hi) = parse_range(range);
        opt.jobs = jobs;
        opt.skip_index = skip_index;
        return cmd_certificate(out, opt, std::cout);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

} // namespace cmm::cli
