#pragma once

#include <stdexcept>
#include <string>

namespace whsolve {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GridError : public Error {
public:
    using Error::Error;
};

// A sampled function was passed on the wrong side (state vs Fourier) or with a bad length.
class SideError : public Error {
public:
    using Error::Error;
};

// Decomposition shift does not map to a state-space node.
class ShiftError : public Error {
public:
    using Error::Error;
};

class FilterSpecError : public Error {
public:
    using Error::Error;
};

// Factorisation symbol vanishes at a node.
class SingularSymbolError : public Error {
public:
    using Error::Error;
};

// Factorisation symbol has nonzero winding number.
class IndexError : public Error {
public:
    using Error::Error;
};

class CaseError : public Error {
public:
    using Error::Error;
};

class SingularDenominatorError : public Error {
public:
    using Error::Error;
};

class SingularSystemError : public Error {
public:
    using Error::Error;
};

}  // namespace whsolve
