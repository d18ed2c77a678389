#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treepat {

// Malformed textual input. `offset` is the byte position of the offending
// character (or text.size() for unexpected end of input).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t offset)
        : std::runtime_error(msg + " at byte " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A computation exceeded its configured time or work budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition on a library call was violated.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace treepat
