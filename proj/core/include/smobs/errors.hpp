#pragma once

#include <stdexcept>
#include <string>

namespace smobs {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct SingularAlgebraicBlock : Error { using Error::Error; };
struct RankDeficientC : Error { using Error::Error; };
struct RankDeficientD : Error { using Error::Error; };
struct UnobservablePair : Error { using Error::Error; };
struct InvalidPoles : Error { using Error::Error; };
struct NoFiniteRelativeDegree : Error { using Error::Error; };
struct SingularD2 : Error { using Error::Error; };
struct RankDeficientCaB : Error { using Error::Error; };
struct SingularDbar : Error { using Error::Error; };
struct SingularLieMatrix : Error { using Error::Error; };
struct ZeroDynamicsPresent : Error { using Error::Error; };
struct TooManySupports : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };
struct UnstablePlant : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

/// Configuration parse/validation failure; carries the offending key path.
struct ConfigError : Error {
    explicit ConfigError(const std::string& key_path, const std::string& what)
        : Error(key_path + ": " + what), key(key_path) {}
    std::string key;
};

/// A non-finite value appeared during integration.
struct NumericBlowup : Error {
    NumericBlowup(long step, const std::string& what)
        : Error("step " + std::to_string(step) + ": " + what), step_index(step) {}
    long step_index;
};

/// A user-supplied model callback failed; carries the offending point.
struct CallbackFailure : Error {
    using Error::Error;
};

}  // namespace smobs
