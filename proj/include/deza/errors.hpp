#ifndef DEZA_ERRORS_HPP
#define DEZA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deza {

/// Bad argument to a graph operation (vertex out of range, u == v, ...).
class ArgumentError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 input. `offset()` is the byte position of the fault.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"), message_(message), offset_(offset)
    {
    }

    /// The message without the byte-offset suffix.
    const std::string& message() const noexcept { return message_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::string message_;
    std::size_t offset_;
};

/// An operation was called on a graph that does not meet its hypothesis.
class PreconditionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// An observation contradicting a structural fact that holds under the
/// standing hypothesis. Only reachable through a precondition violation or a
/// bug, so it is never swallowed.
class ContradictionError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// A configured resource ceiling was exceeded.
class ResourceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace deza

#endif // DEZA_ERRORS_HPP
