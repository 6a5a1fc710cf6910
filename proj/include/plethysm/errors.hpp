#pragma once

#include <stdexcept>
#include <string>

namespace plethysm {

/// Caller passed arguments violating a documented precondition
/// (size mismatches, malformed partitions, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal exactness guarantee failed (non-integral coefficient,
/// rank defect, nonzero residual). Always a bug or a broken assumption,
/// never user error.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A computation was refused because it would exceed a configured
/// resource budget.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace plethysm
