#ifndef MATRED_ERRORS_HPP
#define MATRED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matred {

// Every failure mode has a stable name (used in messages and by the CLI to
// pick an exit code). Keep the names in sync with docs/formats.md.
enum class Errc {
    NotPrime,
    DegreeZero,
    SpecMismatch,
    DivisionByZero,
    ZeroPolynomial,
    NotMonic,
    NotIrreducible,
    FactorBoundExceeded,
    ShapeMismatch,
    EmptyList,
    ExponentTooLarge,
    MalformedExponent,
    PrimeNotPresent,
    NoSmallRow,
    Singular,
    CapExceeded,
    SingularGenerator,
    NotFoundWithinCap,
    NotCovered,
    OrderTooLarge,
    NotPPower,
    InvalidInput,
    VerifyMismatch,
};

const char* errc_name(Errc c);

// Process exit code the CLI maps this error to:
// 2 invalid input, 3 verification mismatch, 4 cap exceeded,
// 5 incomplete integer factorization.
int errc_exit_code(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }
    int exit_code() const { return errc_exit_code(code_); }

  private:
    Errc code_;
};

} // namespace matred

#endif
