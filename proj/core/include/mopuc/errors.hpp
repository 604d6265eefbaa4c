#pragma once

#include <stdexcept>
#include <string>

namespace mopuc {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotPositiveSemidefinite : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct NotInterior : Error { using Error::Error; };
struct NotContraction : Error { using Error::Error; };
struct DegenerateMeasure : Error { using Error::Error; };
struct ImaginaryResidue : Error { using Error::Error; };
struct SizeGuard : Error { using Error::Error; };
struct DegreeExceeds : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace mopuc
