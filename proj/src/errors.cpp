#include "matred/errors.hpp"

namespace matred {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::DegreeZero: return "DegreeZero";
        case Errc::SpecMismatch: return "SpecMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::NotMonic: return "NotMonic";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::FactorBoundExceeded: return "FactorBoundExceeded";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::EmptyList: return "EmptyList";
        case Errc::ExponentTooLarge: return "ExponentTooLarge";
        case Errc::MalformedExponent: return "MalformedExponent";
        case Errc::PrimeNotPresent: return "PrimeNotPresent";
        case Errc::NoSmallRow: return "NoSmallRow";
        case Errc::Singular: return "Singular";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::SingularGenerator: return "SingularGenerator";
        case Errc::NotFoundWithinCap: return "NotFoundWithinCap";
        case Errc::NotCovered: return "NotCovered";
        case Errc::OrderTooLarge: return "OrderTooLarge";
        case Errc::NotPPower: return "NotPPower";
        case Errc::InvalidInput: return "InvalidInput";
        case Errc::VerifyMismatch: return "VerifyMismatch";
    }
    return "UnknownError";
}

int errc_exit_code(Errc c) {
    switch (c) {
        case Errc::VerifyMismatch:
            return 3;
        case Errc::ExponentTooLarge:
        case Errc::CapExceeded:
        case Errc::NotFoundWithinCap:
        case Errc::NotCovered:
        case Errc::OrderTooLarge:
            return 4;
        case Errc::FactorBoundExceeded:
            return 5;
        default:
            return 2;
    }
}

} // namespace matred
