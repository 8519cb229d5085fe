#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mis {

/// Malformed graph6 input; `offset` is the zero-based byte where parsing failed.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A vertex count or index outside what the representation supports.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A formula or operation evaluated outside its mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Unreadable or inconsistent corpus file; `line` is one-based.
class CorpusError : public std::runtime_error {
public:
    CorpusError(std::size_t line, const std::string& what)
        : std::runtime_error("corpus line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A caller-configured output guard was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mis
