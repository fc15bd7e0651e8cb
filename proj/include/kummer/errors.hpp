#ifndef KUMMER_ERRORS_HPP
#define KUMMER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kummer
{

// Operands with incompatible truncation data (weight caps, degree caps).
class truncation_mismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A torus parameter choice that makes some tangent or chart weight vanish.
// Recoverable: callers retry with the next parameter pair.
class genericity_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// An exact identity that must hold (vanishing, homogeneity, integrality, ...)
// was violated.
class validation_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace kummer

#endif
