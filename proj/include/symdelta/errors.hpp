#pragma once

#include <stdexcept>
#include <string>

namespace symdelta {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSquare : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct NotIsotropic : Error { using Error::Error; };
struct WrongDimension : Error { using Error::Error; };
struct NotGraphic : Error { using Error::Error; };
struct NotBinary : Error { using Error::Error; };
struct ImproperSystem : Error { using Error::Error; };
struct GroundSetTooLarge : Error { using Error::Error; };
struct DisconnectedGraph : Error { using Error::Error; };
struct MultipleVertices : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

/// Precondition violations: mismatched ground sets, subsets out of range,
/// overlapping labels and the like.
struct InvalidArgument : Error { using Error::Error; };

} // namespace symdelta
