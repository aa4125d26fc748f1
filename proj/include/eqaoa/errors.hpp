#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqaoa {

// Root of every error raised by the library. `kind()` is the stable,
// machine-readable tag printed by the CLI on failure.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string &what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string &kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

// Qubit count or problem size outside the supported range.
class SizeError : public Error {
  public:
    explicit SizeError(const std::string &what) : Error("size", what) {}
};

// Array lengths that do not match the state dimension.
class ShapeError : public Error {
  public:
    explicit ShapeError(const std::string &what) : Error("shape", what) {}
};

class IndexError : public Error {
  public:
    explicit IndexError(const std::string &what) : Error("index", what) {}
};

// Argument outside an operation's mathematical domain.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string &what) : Error("domain", what) {}
};

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : Error("parse", "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// Instance generator gave up (rejection budget exhausted).
class GenerationError : public Error {
  public:
    explicit GenerationError(const std::string &what)
        : Error("generation", what) {}
};

// Parameter update annihilated every coefficient.
class DegeneracyError : public Error {
  public:
    explicit DegeneracyError(const std::string &what)
        : Error("degeneracy", what) {}
};

class IoError : public Error {
  public:
    explicit IoError(const std::string &what) : Error("io", what) {}
};

} // namespace eqaoa
