#ifndef SCHUR_ERRORS_HPP
#define SCHUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schur {

// Base of every recoverable error raised by the library. The CLI maps
// these to exit code 2; anything else escaping is an internal bug (exit 3).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeModulus : Error { using Error::Error; };
struct MalformedDocument : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct BadVectorLength : Error { using Error::Error; };
struct ImageDoesNotSpan : Error { using Error::Error; };
struct InfeasibleDimensions : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct DuplicatePrime : Error { using Error::Error; };
struct InfeasibleParameters : Error { using Error::Error; };
struct EnumerationTooLarge : Error { using Error::Error; };

} // namespace schur

#endif
