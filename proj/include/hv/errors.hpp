#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class IndexOverflow : public Error {
 public:
  IndexOverflow() : Error("basis index overflow") {}
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DomainNotCovered : public Error {
 public:
  explicit DomainNotCovered(const std::string& key)
      : Error("map domain does not cover " + key), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class NotCentral : public Error {
 public:
  explicit NotCentral(const std::string& what) : Error("value is not central: " + what) {}
};

class IncompatibleSpaces : public Error {
 public:
  IncompatibleSpaces() : Error("solution spaces use different variable registries") {}
};

class InfeasibleWindow : public Error {
 public:
  explicit InfeasibleWindow(const std::string& what) : Error("infeasible window: " + what) {}
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("left-symmetric product denominator 1 + eps*(m+n) vanishes") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hv
