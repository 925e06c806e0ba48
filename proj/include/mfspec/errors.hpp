#ifndef MFSPEC_ERRORS_HPP
#define MFSPEC_ERRORS_HPP

#include <stdexcept>

namespace mfspec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// parameter validation
struct NonPositiveExponent : Error { using Error::Error; };
struct OpenSetViolation : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// words
struct InvalidSymbol : Error { using Error::Error; };
struct WordTooLong : Error { using Error::Error; };
struct PrefixTooShort : Error { using Error::Error; };
struct OddPrefix : Error { using Error::Error; };

// measures and solver domains
struct DegenerateParams : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };
struct OutOfCurveDomain : Error { using Error::Error; };
struct BoundaryParams : Error { using Error::Error; };
struct EqualExponents : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NotOnCurve : Error { using Error::Error; };
struct NonZeroQ : Error { using Error::Error; };

}  // namespace mfspec

#endif
