#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace digadget {

/// Invalid construction input: out-of-range endpoints, bad index, bad bit string.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A serialized state or message that cannot be decoded.
class MalformedMessage : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A streaming algorithm broke its checkpoint contract, or saw an edge
/// structure it cannot interpret.
class ContractViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance-file parse failure; `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace digadget
