#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cmm/rigor/interval.hpp"

namespace cmm {

enum class Verdict { Verified, Failed, Indeterminate, Skipped };

std::string_view to_string(Verdict v);
// Worst of two verdicts: Failed > Indeterminate > Verified. Skipped is neutral.
Verdict combine(Verdict a, Verdict b);

// How lhs and rhs are compared.
enum class Relation {
    Less,     // lhs < rhs
    Greater,  // lhs > rhs
    Overlaps, // the two enclosures are consistent with equality
};

std::string_view to_string(Relation r);

// Outcome of one numeric instance of a claimed inequality or identity.
struct BoundReport {
    std::string claim_id;
    Interval lhs;
    Interval rhs;
    Relation relation = Relation::Less;
    Verdict verdict = Verdict::Indeterminate;
    std::vector<std::pair<std::string, std::string>> metadata;
    bool advisory = false; // not a rigorous certificate, informational only
    std::string note;

    BoundReport& with(std::string key, std::string value)
    {
        metadata.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

Verdict decide(const Interval& lhs, const Interval& rhs, Relation rel);

BoundReport make_report(std::string claim_id, Interval lhs, Interval rhs, Relation rel);

} // namespace cmm
