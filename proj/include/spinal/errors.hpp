#ifndef SPINAL_ERRORS_HPP
#define SPINAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinal {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid arguments or parameters outside their admissible regime.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A configured enumeration cap was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Numeric failure: divergent quadrature, inconsistent kernel, division by
// a vanishing seed probability.
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace spinal

#endif
