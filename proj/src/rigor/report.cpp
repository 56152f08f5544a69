#include "cmm/rigor/report.hpp"

namespace cmm {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Verified:
        return "Verified";
    case Verdict::Failed:
        return "Failed";
    case Verdict::Skipped:
        return "Skipped";
    case Verdict::Indeterminate:
        break;
    }
    return "Indeterminate";
}

Verdict combine(Verdict a, Verdict b)
{
    auto rank = [](Verdict v) {
        switch (v) {
        case Verdict::Failed:
            return 3;
        case Verdict::Indeterminate:
            return 2;
        case Verdict::Verified:
            return 1;
        case Verdict::Skipped:
            break;
        }
        return 0;
    };
    return rank(a) >= rank(b) ? a : b;
}

std::string_view to_string(Relation r)
{
    switch (r) {
    case Relation::Less:
        return "<";
    case Relation::Greater:
        return ">";
    case Relation::Overlaps:
        break;
    }
    return "~";
}

Verdict decide(const Interval& lhs, const Interval& rhs, Relation rel)
{
    const Ordering o = compare(lhs, rhs);
    switch (rel) {
    case Relation::Less:
        return o == Ordering::CertainlyLess      ? Verdict::Verified
               : o == Ordering::CertainlyGreater ? Verdict::Failed
                                                 : Verdict::Indeterminate;
    case Relation::Greater:
        return o == Ordering::CertainlyGreater ? Verdict::Verified
               : o == Ordering::CertainlyLess  ? Verdict::Failed
                                               : Verdict::Indeterminate;
    case Relation::Overlaps:
        break;
    }
    return lhs.overlaps(rhs) ? Verdict::Verified : Verdict::Failed;
}

BoundReport make_report(std::string claim_id, Interval lhs, Interval rhs, Relation rel)
{
    BoundReport r;
    r.claim_id = std::move(claim_id);
    r.verdict = decide(lhs, rhs, rel);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.relation = rel;
    return r;
}

} // namespace cmm
