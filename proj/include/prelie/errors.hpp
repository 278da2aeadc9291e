#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace prelie {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PRELIE_DEFINE_ERROR(Name)                       \
    class Name : public Error {                         \
    public:                                             \
        explicit Name(const std::string& what)          \
            : Error(std::string(#Name) + ": " + what) {} \
    };

PRELIE_DEFINE_ERROR(DimensionMismatch)
PRELIE_DEFINE_ERROR(BadBasis)
PRELIE_DEFINE_ERROR(ShapeError)
PRELIE_DEFINE_ERROR(ArityMismatch)
PRELIE_DEFINE_ERROR(NotAnIdeal)
PRELIE_DEFINE_ERROR(NotACocycle)
PRELIE_DEFINE_ERROR(InvalidExtension)
PRELIE_DEFINE_ERROR(ActionEscapesKernel)
PRELIE_DEFINE_ERROR(InternalAssertionFailed)
PRELIE_DEFINE_ERROR(TruncationMismatch)
PRELIE_DEFINE_ERROR(NeedsHigherTruncation)
PRELIE_DEFINE_ERROR(InvalidInput)
PRELIE_DEFINE_ERROR(ParseError)
PRELIE_DEFINE_ERROR(ValueError)

#undef PRELIE_DEFINE_ERROR

/// Schema violation; `pointer` is a JSON pointer to the offending node.
class SchemaError : public Error {
public:
    SchemaError(std::string pointer, const std::string& what)
        : Error("SchemaError at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what),
          pointer_(std::move(pointer)) {}
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

/// A construction produced output that fails its target verifier; `detail`
/// describes the violation.
class OutputCheckFailed : public Error {
public:
    explicit OutputCheckFailed(std::string detail)
        : Error("OutputCheckFailed: " + detail), detail_(std::move(detail)) {}
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
};

} // namespace prelie
