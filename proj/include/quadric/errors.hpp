#pragma once

#include <stdexcept>
#include <string>

namespace quadric {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
};

#define QUADRIC_ERROR(Name)                                          \
    class Name : public error {                                      \
    public:                                                          \
        using error::error;                                          \
        const char* kind() const noexcept override { return #Name; } \
    }

QUADRIC_ERROR(InfeasibleParams);
QUADRIC_ERROR(RankOutOfRange);
QUADRIC_ERROR(PreconditionFailed);
QUADRIC_ERROR(MaximalDegree);
QUADRIC_ERROR(NonIntegralDegree);
QUADRIC_ERROR(InvalidBundle);
QUADRIC_ERROR(GridTooLarge);

#undef QUADRIC_ERROR

}  // namespace quadric
