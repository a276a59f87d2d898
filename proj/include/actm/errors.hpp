#pragma once

#include <stdexcept>
#include <string>

namespace actm {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch final : Error { using Error::Error; };
struct SingularMatrix final : Error { using Error::Error; };
struct DegenerateForm final : Error { using Error::Error; };
struct FormNotSymmetric final : Error { using Error::Error; };
struct FormNotPositiveDefinite final : Error { using Error::Error; };
struct PhiNotComplexStructure final : Error { using Error::Error; };
struct InvalidTensor final : Error { using Error::Error; };
struct SeedInvariantViolation final : Error { using Error::Error; };
struct NotComplexStructure final : Error { using Error::Error; };
struct IllConditioned final : Error { using Error::Error; };
struct NotSimpleComplex final : Error { using Error::Error; };
struct ToleranceExceeded final : Error { using Error::Error; };
struct WitnessInvalid final : Error { using Error::Error; };
struct VariableCountMismatch final : Error { using Error::Error; };
struct NonConstantDeterminant final : Error { using Error::Error; };
struct ParseError final : Error { using Error::Error; };

} // namespace actm
