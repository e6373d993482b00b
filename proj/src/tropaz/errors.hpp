#ifndef TROPAZ_ERRORS_HPP
#define TROPAZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropaz {

// Base for all errors raised by the library. `code` is a stable machine
// readable tag (e.g. "MalformedRational"), `what()` carries the details.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Bad input: malformed config, violated precondition on user data. Exit 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A size/precision guard tripped. Exit 3.
class GuardError : public Error {
public:
    using Error::Error;
};

// Internal consistency failure; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace tropaz

#endif
