#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexmsa {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document. Carries the 1-based line and the offending field.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string field, const std::string& message);

    std::size_t line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

/// A predicate, role or term that the caller asked for is not present.
class LookupError : public Error {
public:
    using Error::Error;
};

/// A caller broke an operation's precondition.
class ContractError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed; indicates a bug rather than bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace lexmsa
