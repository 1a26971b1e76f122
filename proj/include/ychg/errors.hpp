#ifndef YCHG_ERRORS_HPP
#define YCHG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ychg {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input bytes (PNM, JSON). Carries the offset or JSON path that
// the message already mentions, for callers that want it programmatically.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
    explicit ParseError(const std::string& msg) : Error(msg), offset_(0) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A precondition or invariant violation on otherwise well-formed data.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Filesystem trouble: unreadable input, unwritable output.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace ychg

#endif
