#pragma once

#include <stdexcept>
#include <string>

namespace riddle {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rational was built or divided with a zero denominator.
class ZeroDenominator : public Error {
public:
    ZeroDenominator() : Error("zero denominator") {}
};

/// An instance violates its domain invariants.
class InvalidInstance : public Error {
public:
    using Error::Error;
};

/// A strategy tree node breaks the balance-scale rules.
class MalformedTree : public Error {
public:
    using Error::Error;
};

/// No draw sequence can ever reach the requested multiplicity.
class Infeasible : public Error {
public:
    using Error::Error;
};

/// The walker and the car never meet between station and home.
class NoMeeting : public Error {
public:
    using Error::Error;
};

/// Sweep bounds outside the supported range.
class InvalidBounds : public Error {
public:
    using Error::Error;
};

}  // namespace riddle
