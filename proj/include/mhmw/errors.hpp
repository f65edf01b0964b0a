#pragma once

#include <stdexcept>
#include <string>

namespace mhmw {

// Base class for all library failures.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (poles, invalid parameters).
struct domain_error : error {
    using error::error;
};

// Invalid run configuration (CLI flags / config file). Maps to exit code 2.
struct config_error : error {
    using error::error;
};

// Numerical failure: overflow, precision loss, missing root bracket,
// series cap, grid too coarse. Maps to exit code 3.
struct numeric_error : error {
    using error::error;
};

// Flux derivative requested at (or within one step of) a level crossing,
// where |gamma| has no derivative. Maps to exit code 4.
struct crossing_error : numeric_error {
    using numeric_error::numeric_error;
};

} // namespace mhmw
