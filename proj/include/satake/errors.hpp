#pragma once

#include <stdexcept>
#include <string>

namespace satake {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedGroup : Error { using Error::Error; };
struct InvalidCartanData : Error { using Error::Error; };
struct NonSemisimpleAction : Error { using Error::Error; };
struct NotInGroup : Error { using Error::Error; };
struct NumericalBreakdown : Error { using Error::Error; };
struct UnknownRoot : Error { using Error::Error; };
struct NotInA : Error { using Error::Error; };
struct NotInCell : Error { using Error::Error; };
struct CenterAmbiguity : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };
struct EmptySample : Error { using Error::Error; };
struct IncompatibleWindows : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotInChart : Error { using Error::Error; };
struct WrongGroup : Error { using Error::Error; };
struct NotComposable : Error { using Error::Error; };
struct WrongOrbit : Error { using Error::Error; };
struct SignMismatch : Error { using Error::Error; };

} // namespace satake
