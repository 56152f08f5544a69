#pragma once

#include <stdexcept>
#include <string>

namespace cmm {

// Base for every error raised by the toolkit. Callers that only need to
// distinguish "our" failures from std::bad_alloc & co catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CMM_DEFINE_ERROR(Name)                                                 \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
    }

// rigor-interval
CMM_DEFINE_ERROR(DivisionByIntervalContainingZero);
CMM_DEFINE_ERROR(NegativeSqrt);
CMM_DEFINE_ERROR(LogNonPositive);
CMM_DEFINE_ERROR(UnknownConstant);
CMM_DEFINE_ERROR(ArgumentReductionFailure);
CMM_DEFINE_ERROR(InvalidPrecision);

// series-engine
CMM_DEFINE_ERROR(OrderMismatch);
CMM_DEFINE_ERROR(IoError);

// seaweed-combinatorics
CMM_DEFINE_ERROR(SumMismatch);

// special-functions
CMM_DEFINE_ERROR(UnsupportedArgument);
CMM_DEFINE_ERROR(NonPositiveArgument);

// circle-method-bounds
CMM_DEFINE_ERROR(OutOfDisk);
CMM_DEFINE_ERROR(NotOnMajorArc);
CMM_DEFINE_ERROR(UnsupportedArguments);

#undef CMM_DEFINE_ERROR

} // namespace cmm
