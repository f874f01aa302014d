#include "cw/errors.hpp"

namespace cw {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotReduced: return "NotReduced";
        case ErrorKind::NonDominant: return "NonDominant";
        case ErrorKind::FrozenIndex: return "FrozenIndex";
        case ErrorKind::StarUndefined: return "StarUndefined";
        case ErrorKind::NotTypeA: return "NotTypeA";
        case ErrorKind::NotAcyclic: return "NotAcyclic";
        case ErrorKind::LinearAnCaveat: return "LinearAnCaveat";
        case ErrorKind::HeightBoundExceeded: return "HeightBoundExceeded";
        case ErrorKind::VarTableMismatch: return "VarTableMismatch";
        case ErrorKind::OrientationInconsistent: return "OrientationInconsistent";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::NonUnitNegativePower: return "NonUnitNegativePower";
        case ErrorKind::NotPolynomialAfterSubstitution: return "NotPolynomialAfterSubstitution";
        case ErrorKind::NegativeEntry: return "NegativeEntry";
        case ErrorKind::TieInTotals: return "TieInTotals";
        case ErrorKind::StepMismatch: return "StepMismatch";
        case ErrorKind::IdentityFails: return "IdentityFails";
        case ErrorKind::NonIntegral: return "NonIntegral";
        case ErrorKind::DividedPowerNotIntegral: return "DividedPowerNotIntegral";
        case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
        case ErrorKind::Mismatch: return "Mismatch";
        case ErrorKind::LaurentViolation: return "LaurentViolation";
    }
    return "Unknown";
}

bool is_validation(ErrorKind k) {
    return static_cast<int>(k) <= static_cast<int>(ErrorKind::BadInput);
}

}  // namespace cw
