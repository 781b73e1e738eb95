#pragma once

#include <stdexcept>
#include <string>

namespace braidkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct PoleAtContext : Error {
    using Error::Error;
};

struct NonTermination : Error {
    using Error::Error;
};

struct Inhomogeneous : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct StarNotAdmissible : Error {
    using Error::Error;
};

struct UngradedGenerator : Error {
    using Error::Error;
};

struct IllConditioned : Error {
    using Error::Error;
};

struct HypothesisFailed : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace braidkit
