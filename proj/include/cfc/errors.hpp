#pragma once

#include <stdexcept>
#include <string>

namespace cfc {

// malformed files and violated input contracts
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a configured size guard was exceeded
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an algorithm reached a state its case analysis does not cover
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace cfc
