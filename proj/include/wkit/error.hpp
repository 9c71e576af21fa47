#pragma once

#include <stdexcept>
#include <string>

namespace wkit {

/// Raised for malformed or out-of-domain inputs (bad sides, dimension
/// mismatch, non-finite coordinates, malformed files).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a curve jet does not have unit speed within the requested
/// tolerance. Carries the offending sample index when known.
class UnitSpeedError : public InputError {
public:
    UnitSpeedError(const std::string& what, long index = -1)
        : InputError(what), index_(index) {}

    long index() const noexcept { return index_; }

private:
    long index_;
};

} // namespace wkit
