#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cmm/cli/cli.hpp"

using namespace cmm;
using namespace cmm::cli;

TEST_CASE("exit codes")
{
    CHECK(exit_code(Verdict::Verified) == 0);
    CHECK(exit_code(Verdict::Failed) == 1);
    CHECK(exit_code(Verdict::Indeterminate) == 2);
}

TEST_CASE("range parsing")
{
    CHECK(parse_range("2000:3000") == std::pair<long, long>{2000, 3000});
    CHECK_THROWS_AS(parse_range("3000"), UnsupportedArguments);
    CHECK_THROWS_AS(parse_range("5:2"), UnsupportedArguments);
    CHECK_THROWS_AS(parse_range("a:b"), UnsupportedArguments);
}

TEST_CASE("expand prints coefficients")
{
    std::ostringstream os;
    CHECK(cmd_expand(7, std::nullopt, true, os) == 0);
    CHECK(os.str() == "1 1 1 0 0 1 2 1\n");
    std::ostringstream zero;
    cmd_expand(0, std::nullopt, true, zero);
    CHECK(zero.str() == "1\n");
}

TEST_CASE("verify-index table")
{
    std::ostringstream os;
    CHECK(cmd_verify_index(7, os) == 0);
    CHECK(os.str().find("all match") != std::string::npos);
}

TEST_CASE("threshold output is independent of the worker count")
{
    std::ostringstream one;
    std::ostringstream four;
    cmd_threshold(2000, 2600, 1, Precision{}, one);
    cmd_threshold(2000, 2600, 4, Precision{}, four);
    CHECK(one.str() == four.str());
    std::ostringstream clean;
    CHECK(cmd_threshold(5000, 5100, 0, Precision{}, clean) == 0);
    CHECK(clean.str().find("no failures in range") != std::string::npos);
}

TEST_CASE("certificate JSON carries exact endpoints")
{
    const Interval x = Interval::rational(1, 3);
    const auto j = to_json(x);
    CHECK(j["lo"]["mantissa"].is_string());
    CHECK(j["lo"]["exponent"].is_number_integer());

    CertificateOptions opt;
    opt.coefficient_order = 200;
    opt.index_max = 10;
    opt.scan_lo = 5000;
    opt.scan_hi = 5050;
    opt.skip_index = true;
    const Certificate c = build_certificate(opt);
    CHECK(c.index_check.verdict == Verdict::Skipped);
    CHECK(c.coefficient_check.verdict == Verdict::Verified);
    CHECK(std::is_sorted(c.reports.begin(), c.reports.end(),
                         [](const BoundReport& a, const BoundReport& b) { return a.claim_id < b.claim_id; }));
    auto a = to_json(c);
    auto b = to_json(build_certificate(opt));
    a.erase("timestamp");
    b.erase("timestamp");
    CHECK(a.dump() == b.dump());
}
