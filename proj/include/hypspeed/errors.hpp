#pragma once

#include <stdexcept>
#include <string>

namespace hypspeed {

/// Operation not available for the given domain kind (e.g. exact maps of a comb).
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raw parameters that do not describe a valid object.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace hypspeed
