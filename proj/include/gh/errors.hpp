#ifndef GH_ERRORS_HPP
#define GH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gh {

// An argument lies outside an operation's domain (negative binomial index,
// zero denominator, N < 1, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Matrix/vector dimensions do not match the operation.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A spectral precondition failed: the matrix is not unipotent (resp. not
// nilpotent) where the operation requires it, so a series would not
// terminate.
class SpectrumError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An exact internal cross-check failed. This cannot happen for inputs that
// satisfy the documented preconditions; it indicates a precondition
// violation the operation could not detect upfront.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace gh

#endif // GH_ERRORS_HPP
