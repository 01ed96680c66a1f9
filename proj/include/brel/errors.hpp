#pragma once

#include <stdexcept>
#include <string>

namespace brel {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct AmbientMismatch : Error {
    using Error::Error;
};
struct NotASubgroup : Error {
    using Error::Error;
};
struct NotAQuotient : Error {
    using Error::Error;
};
struct InvalidQuintuple : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct WrongQuotientType : Error {
    using Error::Error;
};
struct UnsupportedTarget : Error {
    using Error::Error;
};
struct OrderBoundExceeded : Error {
    using Error::Error;
};
struct NotACharacter : Error {
    using Error::Error;
};
struct NotARelation : Error {
    using Error::Error;
};
struct NoCertificate : Error {
    using Error::Error;
};
struct VerificationFailure : Error {
    using Error::Error;
};

}  // namespace brel
