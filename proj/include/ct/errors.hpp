#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ct {

/// Base of every failure raised by the toolkit. `code()` is a stable token
/// used by the CLI when it reports errors as documents.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define CT_DEFINE_ERROR(Name, Code)                                            \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(Code, what) {}          \
    };

CT_DEFINE_ERROR(CollinearInput, "CollinearInput")
CT_DEFINE_ERROR(EmptyInput, "EmptyInput")
CT_DEFINE_ERROR(ValidationError, "ValidationError")
CT_DEFINE_ERROR(ParseError, "ParseError")
CT_DEFINE_ERROR(NotNearDisk, "NotNearDisk")
CT_DEFINE_ERROR(NotConstantWidth, "NotConstantWidth")
CT_DEFINE_ERROR(NoUnionDirection, "NoUnionDirection")
CT_DEFINE_ERROR(EmptyRegion, "EmptyRegion")
CT_DEFINE_ERROR(CoverSearchFailed, "CoverSearchFailed")
CT_DEFINE_ERROR(RadiusTooSmall, "RadiusTooSmall")
CT_DEFINE_ERROR(RotationUncoverable, "RotationUncoverable")
CT_DEFINE_ERROR(BudgetExceeded, "BudgetExceeded")
CT_DEFINE_ERROR(GenerationFailed, "GenerationFailed")
CT_DEFINE_ERROR(UnknownFixture, "UnknownFixture")

#undef CT_DEFINE_ERROR

/// Identifies one set of a colored instance: family index and position in it.
struct SetRef {
    std::size_t family = 0;
    std::size_t index = 0;
    friend bool operator==(const SetRef&, const SetRef&) = default;
};

/// Two different families each contain a pair of sets separated by a line
/// perpendicular to `theta`; one set of the first pair is then disjoint from
/// one set of the second, which the colorful hypothesis forbids.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(const std::string& what, double theta, std::vector<SetRef> witnesses)
        : Error("HypothesisViolation", what), theta_(theta), witnesses_(std::move(witnesses)) {}
    double theta() const noexcept { return theta_; }
    const std::vector<SetRef>& witnesses() const noexcept { return witnesses_; }

private:
    double theta_;
    std::vector<SetRef> witnesses_;
};

}  // namespace ct
