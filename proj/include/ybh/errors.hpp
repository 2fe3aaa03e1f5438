#ifndef YBH_ERRORS_HPP
#define YBH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ybh {

// Base class for all library errors. Subtypes exist so callers can
// distinguish validation failures from mathematical precondition failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- algebra ---------------------------------------------------------------
struct ShapeMismatch : Error {
    using Error::Error;
};
struct EntryOutOfRange : Error {
    using Error::Error;
};
struct NotAUnit : Error {
    using Error::Error;
};
struct ConditionFails : Error {
    using Error::Error;
};
struct NotBijective : Error {
    using Error::Error;
};

// -- complex ---------------------------------------------------------------
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct BarUnavailable : Error {
    using Error::Error;
};
struct NotYangBaxter : Error {
    using Error::Error;
};

// -- smith -----------------------------------------------------------------
struct NotAComplex : Error {
    using Error::Error;
};
struct NotACycle : Error {
    using Error::Error;
};
struct NotPrime : Error {
    using Error::Error;
};

// -- knots -----------------------------------------------------------------
struct DanglingSemiArc : Error {
    using Error::Error;
};
struct DuplicateSlot : Error {
    using Error::Error;
};
struct BadSign : Error {
    using Error::Error;
};
struct NotABiquandle : Error {
    using Error::Error;
};

// -- cli / io --------------------------------------------------------------
struct ParseError : Error {
    using Error::Error;
};
struct ResourceGuard : Error {
    using Error::Error;
};

}  // namespace ybh

#endif
