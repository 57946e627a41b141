#ifndef TROP_ERRORS_HPP
#define TROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trop {

// All library errors carry a machine-readable kind string; the CLI maps
// kinds to exit codes and JSON error reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

namespace errk {
// curve / divisor
inline constexpr const char* InvalidCurve = "InvalidCurve";
inline constexpr const char* UnknownId = "UnknownId";
inline constexpr const char* InvalidDivisor = "InvalidDivisor";
// morphism
inline constexpr const char* IncidenceViolation = "IncidenceViolation";
inline constexpr const char* NotHarmonic = "NotHarmonic";
inline constexpr const char* DegreeInconsistent = "DegreeInconsistent";
inline constexpr const char* RHViolation = "RHViolation";
inline constexpr const char* OddLocalDefect = "OddLocalDefect";
inline constexpr const char* WrongArity = "WrongArity";
// oracle / enumeration
inline constexpr const char* ResourceExceeded = "ResourceExceeded";
inline constexpr const char* GenusMismatch = "GenusMismatch";
inline constexpr const char* EnumerationIncomplete = "EnumerationIncomplete";
inline constexpr const char* NotBinary = "NotBinary";
inline constexpr const char* InvalidFactorization = "InvalidFactorization";
inline constexpr const char* InternalInconsistency = "InternalInconsistency";
// parsing
inline constexpr const char* MalformedProfile = "MalformedProfile";
inline constexpr const char* UnequalSums = "UnequalSums";
inline constexpr const char* ParseError = "ParseError";
inline constexpr const char* DuplicateLeaf = "DuplicateLeaf";
inline constexpr const char* LeafProfileMismatch = "LeafProfileMismatch";
// arithmetic
inline constexpr const char* Overflow = "Overflow";
} // namespace errk

[[noreturn]] inline void fail(const char* kind, const std::string& detail) {
    throw Error(kind, detail);
}

} // namespace trop

#endif
