#pragma once

#include <stdexcept>
#include <string>

namespace morphx {

// A file could not be read or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// File content is not a supported image format (or is corrupt).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument, configuration, or dimension precondition.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace morphx
