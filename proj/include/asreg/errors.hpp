#pragma once

#include <stdexcept>
#include <string>

namespace asreg {

// Base class for every failure raised by the toolkit. The `kind` string is
// stable and shows up in reports, so tests can match on it.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ASREG_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    }

ASREG_DEFINE_ERROR(DivisionByZero);
ASREG_DEFINE_ERROR(FieldMismatch);
ASREG_DEFINE_ERROR(InvalidField);
ASREG_DEFINE_ERROR(DegreeMismatch);
ASREG_DEFINE_ERROR(ShapeMismatch);
ASREG_DEFINE_ERROR(SingularMap);
ASREG_DEFINE_ERROR(ZeroPotential);
ASREG_DEFINE_ERROR(DegeneratePotential);
ASREG_DEFINE_ERROR(NotABasis);
ASREG_DEFINE_ERROR(NotFrobeniusShape);
ASREG_DEFINE_ERROR(DegeneratePairing);
ASREG_DEFINE_ERROR(DegreeTooLarge);
ASREG_DEFINE_ERROR(NonHomogeneousInput);
ASREG_DEFINE_ERROR(ConditionViolated);
ASREG_DEFINE_ERROR(NoTable2Row);
ASREG_DEFINE_ERROR(UnknownType);
ASREG_DEFINE_ERROR(CubeRootUnavailable);
ASREG_DEFINE_ERROR(ZeroTriple);
ASREG_DEFINE_ERROR(NotOnCurve);
ASREG_DEFINE_ERROR(SingularCurve);
ASREG_DEFINE_ERROR(ThreeTorsionPoint);
ASREG_DEFINE_ERROR(TauOrderUnsupported);
ASREG_DEFINE_ERROR(SamplingExhausted);
ASREG_DEFINE_ERROR(SyntaxError);
ASREG_DEFINE_ERROR(MixedDegree);
ASREG_DEFINE_ERROR(UnboundParameter);

#undef ASREG_DEFINE_ERROR

}  // namespace asreg
