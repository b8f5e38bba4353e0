#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace boole {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A size/count parameter is outside its supported range.
struct SizeError : Error {
    using Error::Error;
};

/// A value violates a domain precondition (probability outside [0,1], angle
/// outside [0,2pi], negative weight, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Two objects that must share a scenario do not.
struct ScenarioError : Error {
    using Error::Error;
};

/// Required subsets are absent from an assignment. `missing` lists them
/// (1-based indices, strictly increasing within each subset).
struct MissingDataError : Error {
    MissingDataError(const std::string& what, std::vector<std::vector<int>> absent)
        : Error(what), missing(std::move(absent)) {}
    std::vector<std::vector<int>> missing;
};

/// An inequality references subset orders the operation does not support.
struct UnsupportedOrderError : Error {
    using Error::Error;
};

/// A correlation target outside the supported model.
struct UnsupportedTargetError : Error {
    using Error::Error;
};

}  // namespace boole
