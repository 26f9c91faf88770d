#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quatimage {

/// Coarse error category used by the CLI to pick an exit code.
enum class ErrorKind {
    Parse,          // malformed input text
    ClassMismatch,  // requested target lies outside the image class
    Budget,         // a configured cap or search budget was exceeded
    Domain,         // domain violation inside the algebra (division by zero, ...)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string type, const std::string& what)
        : std::runtime_error(what), kind_(kind), type_(std::move(type)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& type() const noexcept { return type_; }

private:
    ErrorKind kind_;
    std::string type_;
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what = "division by zero")
        : Error(ErrorKind::Domain, "DivisionByZero", what) {}
};

class NegativeRadicandError : public Error {
public:
    explicit NegativeRadicandError(const std::string& what = "square root of a negative value")
        : Error(ErrorKind::Domain, "NegativeRadicand", what) {}
};

/// Parse errors carry the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(ErrorKind::Parse, "SyntaxError", what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownBuiltinError : public Error {
public:
    UnknownBuiltinError(const std::string& name, std::size_t position)
        : Error(ErrorKind::Parse, "UnknownBuiltin",
                "unknown builtin '" + name + "' (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class VariableIndexOutOfRangeError : public Error {
public:
    VariableIndexOutOfRangeError(const std::string& what, std::size_t position)
        : Error(ErrorKind::Parse, "VariableIndexOutOfRange",
                what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ArityMismatchError : public Error {
public:
    explicit ArityMismatchError(const std::string& what)
        : Error(ErrorKind::Domain, "ArityMismatch", what) {}
};

class NotMultilinearError : public Error {
public:
    explicit NotMultilinearError(const std::string& what = "polynomial is not multilinear")
        : Error(ErrorKind::Domain, "NotMultilinear", what) {}
};

class ArityCapExceededError : public Error {
public:
    explicit ArityCapExceededError(const std::string& what)
        : Error(ErrorKind::Budget, "ArityCapExceeded", what) {}
};

class ClassMismatchError : public Error {
public:
    explicit ClassMismatchError(const std::string& what)
        : Error(ErrorKind::ClassMismatch, "ClassMismatch", what) {}
};

class SearchBudgetExceededError : public Error {
public:
    explicit SearchBudgetExceededError(const std::string& what)
        : Error(ErrorKind::Budget, "SearchBudgetExceeded", what) {}
};

class ZeroPolynomialError : public Error {
public:
    explicit ZeroPolynomialError(const std::string& what = "operation undefined for the zero polynomial")
        : Error(ErrorKind::Domain, "ZeroPolynomial", what) {}
};

class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& what)
        : Error(ErrorKind::Budget, "CapExceeded", what) {}
};

class NotAVectorError : public Error {
public:
    explicit NotAVectorError(const std::string& what = "operand must be a vector quaternion")
        : Error(ErrorKind::Domain, "NotAVector", what) {}
};

class ZeroVectorError : public Error {
public:
    explicit ZeroVectorError(const std::string& what = "operand must be a nonzero vector")
        : Error(ErrorKind::Domain, "ZeroVector", what) {}
};

class InvalidRatioPointError : public Error {
public:
    explicit InvalidRatioPointError(const std::string& what = "ratio point (0,0) is not on the circle")
        : Error(ErrorKind::Domain, "InvalidRatioPoint", what) {}
};

}  // namespace quatimage
