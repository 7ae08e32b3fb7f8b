#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p4wis {

using Vertex = std::uint32_t;
using Weight = std::int64_t;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller handed in something that violates a documented precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The graph is not (P4+P4, Triangle)-free. `witness` holds the offending
/// vertices: three for a triangle, eight (two induced paths) for P4+P4.
class ClassViolation : public Error {
 public:
  ClassViolation(const std::string& what, std::vector<Vertex> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::vector<Vertex> witness_;
};

/// A structural claim the solver relies on did not hold on this input.
class StructureViolation : public Error {
 public:
  StructureViolation(std::string claim, const std::string& what,
                     std::vector<Vertex> witness)
      : Error(claim + ": " + what),
        claim_(std::move(claim)),
        witness_(std::move(witness)) {}
  const std::string& claim() const noexcept { return claim_; }
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::string claim_;
  std::vector<Vertex> witness_;
};

/// Exponential routine refused an instance above its size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Broken internal invariant (self-certification or depth guard).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace p4wis
