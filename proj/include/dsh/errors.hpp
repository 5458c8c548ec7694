#pragma once

#include <stdexcept>
#include <string>

namespace dsh {

// Operands that do not fit together: caps, groups or dimensions disagree.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument outside the domain of a mathematical operation.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a result that must hold by construction does not.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace dsh
