#pragma once

#include <stdexcept>
#include <string>

namespace linrel {

// Base class for everything this library throws on bad input.
// Internal invariant violations use std::logic_error instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class NotAPrime : public Error {
public:
    explicit NotAPrime(const std::string& what) : Error(what) {}
};

class BadScalar : public Error {
public:
    explicit BadScalar(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Relation pairs whose space shapes do not line up for the requested problem.
class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

class NotContained : public Error {
public:
    explicit NotContained(const std::string& what) : Error(what) {}
};

class NotAnOperator : public Error {
public:
    explicit NotAnOperator(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

} // namespace linrel
