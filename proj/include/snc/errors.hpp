#pragma once

#include <stdexcept>
#include <string>

namespace snc {

/// Base class for every failure raised by the library.  Subclasses carry no
/// extra state; the what() string names the offending ids.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// pic-arith
struct MixedGeometry : Error { using Error::Error; };
struct NotAnAutomorphism : Error { using Error::Error; };

// snc-core
struct UndefinedForm : Error { using Error::Error; };

// blowup-engine
struct CenterOnTriplePoint : Error { using Error::Error; };
struct CenterNotOnCurve : Error { using Error::Error; };

// canonical-checks
struct MissingTwist : Error { using Error::Error; };

// chart-kernel
struct DomainError : Error { using Error::Error; };
struct DegenerateStructure : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

// scenario-cli
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct SemanticError : Error { using Error::Error; };

} // namespace snc
