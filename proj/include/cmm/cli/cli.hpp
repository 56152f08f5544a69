#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmm/circle/circle.hpp"
#include "cmm/rigor/report.hpp"

namespace cmm::cli {

// Process exit status shared by every subcommand.
enum ExitCode : int {
    kExitVerified = 0,
    kExitFailed = 1,
    kExitIndeterminate = 2,
    kExitUsage = 3,
};

int exit_code(Verdict v);

// The largest n at which the final inequality is claimed to fail, and the
// cutoff imposed by the minor-arc range x < pi/480.
inline constexpr long kClaimedThreshold = 2322;
inline constexpr long kMinorArcCutoff = 4800;

// Every report the lemma suite produces, in a fixed order.
std::vector<BoundReport> lemma_suite(Precision p);

// Scan verdict: Verified iff no n above the claimed threshold fails and
// nothing above the observed threshold is left undecided.
Verdict scan_verdict(const circle::ThresholdScan& s);

int cmd_expand(std::size_t order, const std::optional<std::filesystem::path>& out, bool text, std::ostream& os);
int cmd_verify_index(int max_n, std::ostream& os);
int cmd_check_lemmas(Precision p, std::ostream& os);
int cmd_threshold(long lo, long hi, int jobs, Precision p, std::ostream& os);

struct CertificateOptions {
    Precision precision;
    std::size_t coefficient_order = 10000;
    int index_max = 60;
    long scan_lo = 2000;
    long scan_hi = 100000;
    int jobs = 0;
    bool skip_index = false;
};

struct SectionCheck {
    long bound = 0; // max order or max n
    Verdict verdict = Verdict::Skipped;
    std::string detail;
};

struct Certificate {
    std::string tool_version;
    unsigned precision_bits = 0;
    std::vector<BoundReport> reports; // sorted by claim_id, stable
    circle::ThresholdScan scan;
    Verdict scan_verdict = Verdict::Indeterminate;
    SectionCheck coefficient_check;
    SectionCheck index_check;
    std::string timestamp;

    Verdict overall() const;
};

Certificate build_certificate(const CertificateOptions& opt);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const Interval& x);

int cmd_certificate(const std::filesystem::path& out, const CertificateOptions& opt, std::ostream& os);

// Parses argv and dispatches; returns the exit status.
int run(int argc, char** argv);

// "lo:hi" -> {lo, hi}; throws UnsupportedArguments on malformed input.
std::pair<long, long> parse_range(const std::string& text);

} // namespace cmm::cli
