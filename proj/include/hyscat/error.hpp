#pragma once

#include <stdexcept>
#include <string>

namespace hyscat {

/// Base of every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument lies on (or within 1e-12 of) a pole of the Gamma function.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of the operation (r <= 0, invalid parameters, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A series or iteration hit its cap before meeting its tolerance.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// c - a - b too close to an integer for the two-term connection formula.
class DegenerateParameters : public Error {
public:
    using Error::Error;
};

/// 2 mu E / hbar^2 - alpha^2 l(l+1) <= 0: no propagating asymptotic wave.
class EvanescentChannel : public Error {
public:
    using Error::Error;
};

/// Pole equation has no sign change in the search window.
class NoBracket : public Error {
public:
    using Error::Error;
};

/// Shooting solver found no level with the requested node count.
class NoneFound : public Error {
public:
    using Error::Error;
};

/// Two-point asymptotic fit is numerically singular.
class IllConditioned : public Error {
public:
    using Error::Error;
};

/// A non-finite value was produced where a finite one is required.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace hyscat
