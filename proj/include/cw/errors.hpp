#pragma once

#include <stdexcept>
#include <string>

namespace cw {

enum class ErrorKind {
    // input problems (cli exit code 2)
    IndexOutOfRange,
    NotReduced,
    NonDominant,
    FrozenIndex,
    StarUndefined,
    NotTypeA,
    NotAcyclic,
    LinearAnCaveat,
    HeightBoundExceeded,
    VarTableMismatch,
    OrientationInconsistent,
    SizeMismatch,
    BadInput,
    // engine assertion failures (cli exit code 3)
    NotDivisible,
    NonUnitNegativePower,
    NotPolynomialAfterSubstitution,
    NegativeEntry,
    TieInTotals,
    StepMismatch,
    IdentityFails,
    NonIntegral,
    DividedPowerNotIntegral,
    NonIntegralCoefficient,
    Mismatch,
    LaurentViolation,
};

const char* kind_name(ErrorKind k);
bool is_validation(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& what)
        : std::runtime_error(std::string(kind_name(k)) + ": " + what), kind_(k) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cw
