#pragma once

#include <stdexcept>
#include <string>

namespace latsum {

// Base for all library errors. `code()` is a stable machine-readable
// identifier; the CLI maps each code to a distinct exit status.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define LATSUM_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& msg) : Error(#Name, msg) {} \
    }

LATSUM_DEFINE_ERROR(SingularBasis);
LATSUM_DEFINE_ERROR(UnknownLattice);
LATSUM_DEFINE_ERROR(OutOfDomain);
LATSUM_DEFINE_ERROR(EnumerationTooLarge);
LATSUM_DEFINE_ERROR(DomainError);
LATSUM_DEFINE_ERROR(NoConvergence);
LATSUM_DEFINE_ERROR(DivergentExponent);
LATSUM_DEFINE_ERROR(NoDensity);
LATSUM_DEFINE_ERROR(NonSummableTail);
LATSUM_DEFINE_ERROR(QuadratureFailure);
LATSUM_DEFINE_ERROR(NoMinimumInRange);
LATSUM_DEFINE_ERROR(IndeterminateAtTriangular);
LATSUM_DEFINE_ERROR(NoCrossoverFound);
LATSUM_DEFINE_ERROR(IntegralDivergence);
LATSUM_DEFINE_ERROR(UnknownFigure);
LATSUM_DEFINE_ERROR(ConfigParse);

#undef LATSUM_DEFINE_ERROR

} // namespace latsum
