#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include "cmm/cli/cli.hpp"
#include "cmm/seaweed/meander.hpp"
#include "cmm/series/cache.hpp"
#include "cmm/series/qseries.hpp"

#ifndef CMM_VERSION
#define CMM_VERSION "0.0.0"
#endif

namespace cmm::cli {

using nlohmann::json;

namespace {

json dyadic(const Dyadic& d)
{
    return {{"mantissa", d.mantissa}, {"exponent", d.exponent}};
}

std::string utc_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json section(const SectionCheck& s, const char* bound_key)
{
    return {{bound_key, s.bound}, {"verdict", std::string(to_string(s.verdict))}, {"detail", s.detail}};
}

} // namespace

json to_json(const Interval& x)
{
    return {{"lo", dyadic(x.lo_dyadic())}, {"hi", dyadic(x.hi_dyadic())}, {"decimal", x.str(17)}};
}

json to_json(const BoundReport& r)
{
    json meta = json::object();
    for (const auto& [k, v] : r.metadata) {
        meta[k] = v;
    }
    json j{{"claim_id", r.claim_id},
           {"relation", std::string(to_string(r.relation))},
           {"verdict", std::string(to_string(r.verdict))},
           {"advisory", r.advisory},
           {"lhs", to_json(r.lhs)},
           {"rhs", to_json(r.rhs)},
           {"metadata", meta}};
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    return j;
}

Verdict Certificate::overall() const
{
    Verdict v = Verdict::Verified;
    for (const auto& r : reports) {
        v = combine(v, r.verdict);
    }
    v = combine(v, scan_verdict);
    v = combine(v, coefficient_check.verdict);
    return combine(v, index_check.verdict);
}

Certificate build_certificate(const CertificateOptions& opt)
{
    Certificate c;
    c.tool_version = CMM_VERSION;
    c.precision_bits = opt.precision.bits();
    c.timestamp = utc_now();

    const auto g = series::expand_G_cached(opt.coefficient_order);
    const auto neg = series::scan_nonnegative(g.series);
    c.coefficient_check.bound = static_cast<long>(opt.coefficient_order);
    c.coefficient_check.verdict = neg.all_nonnegative() ? Verdict::Verified : Verdict::Failed;
    c.coefficient_check.detail =
        neg.all_nonnegative() ? "AllNonNegative" : "first negative at n=" + std::to_string(*neg.first_negative);

    c.index_check.bound = opt.index_max;
    if (opt.skip_index) {
        c.index_check.verdict = Verdict::Skipped;
        c.index_check.detail = "skipped";
    } else {
        const auto rows = seaweed::verify_part2(opt.index_max);
        const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.match; });
        c.index_check.verdict = ok ? Verdict::Verified : Verdict::Failed;
        c.index_check.detail = ok ? "|e_n - o_n| = a(n) for every n" : "mismatch";
    }

    c.reports = lemma_suite(opt.precision);
    std::stable_sort(c.reports.begin(), c.reports.end(),
                     [](const BoundReport& a, const BoundReport& b) { return a.claim_id < b.claim_id; });

    c.scan = circle::threshold_scan(opt.scan_lo, opt.scan_hi, opt.jobs, opt.precision);
    c.scan_verdict = scan_verdict(c.scan);
    return c;
}

json to_json(const Certificate& c)
{
    json reports = json::array();
    for (const auto& r : c.reports) {
        reports.push_back(to_json(r));
    }
    json scan{{"lo", c.scan.lo},
              {"hi", c.scan.hi},
              {"threshold", c.scan.threshold ? json(*c.scan.threshold) : json(nullptr)},
              {"claimed_threshold", kClaimedThreshold},
              {"verified", c.scan.verified},
              {"failed", c.scan.failed},
              {"indeterminate", c.scan.indeterminate},
              {"failures", c.scan.failures},
              {"indeterminates", c.scan.indeterminates},
              {"verified_above_threshold", c.scan.verified_above_threshold},
              {"verdict", std::string(to_string(c.scan_verdict))}};
    return {{"tool_version", c.tool_version},
            {"precision_bits", c.precision_bits},
            {"timestamp", c.timestamp},
            {"coefficient_check", section(c.coefficient_check, "max_order")},
            {"index_check", section(c.index_check, "max_n")},
            {"scan_results", scan},
            {"reports", reports},
            {"overall", std::string(to_string(c.overall()))}};
}

int cmd_certificate(const std::filesystem::path& out, const CertificateOptions& opt, std::ostream& os)
{
    const Certificate c = build_certificate(opt);
    const std::filesystem::path tmp = out.string() + ".tmp";
    {
        std::ofstream f(tmp);
        if (!(f << to_json(c).dump(2) << '\n')) {
            throw IoError("cannot write " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, out, ec);
    if (ec) {
        throw IoError("cannot move certificate into place: " + ec.message());
    }
    long failed = 0;
    for (const auto& r : c.reports) {
        failed += r.verdict == Verdict::Failed;
    }
    os << "coefficients: " << to_string(c.coefficient_check.verdict) << " (" << c.coefficient_check.detail << ")\n"
       << "index: " << to_string(c.index_check.verdict) << '\n'
       << "reports: " << c.reports.size() << " (" << failed << " failed)\n"
       << "scan: " << to_string(c.scan_verdict) << " threshold="
       << (c.scan.threshold ? std::to_string(*c.scan.threshold) : "none") << '\n'
       << "overall: " << to_string(c.overall()) << '\n'
       << "wrote " << out.string() << '\n';
    return exit_code(c.overall());
}

} // namespace cmm::cli
