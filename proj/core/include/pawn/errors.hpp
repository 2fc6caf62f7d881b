#pragma once

#include <stdexcept>
#include <string>

namespace pawn {

/// Base of every error raised by the library. Each subclass names a
/// violated precondition so callers can branch on the type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NotDeficient : public Error {
public:
    using Error::Error;
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

class NotADivisor : public Error {
public:
    using Error::Error;
};

class NotAbundant : public Error {
public:
    using Error::Error;
};

class NotAbundantOrPerfect : public Error {
public:
    using Error::Error;
};

class NoSuchPrime : public Error {
public:
    using Error::Error;
};

/// A prime-counting request reached past the configured sieve ceiling.
class CeilingExceeded : public Error {
public:
    using Error::Error;
};

class PrefixNotDeficient : public Error {
public:
    using Error::Error;
};

class InvalidSequence : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace pawn
