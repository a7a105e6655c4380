#pragma once

#include <stdexcept>
#include <string>

namespace scatlab {

// Caller handed us something outside the documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computed object failed its own self-check (e.g. completion did not close up).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace scatlab
