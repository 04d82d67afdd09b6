#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace regulus {

/// Element index into a structure's tables. Every finite structure stores its
/// elements as 0..order-1; the additive identity is always index 0.
using Idx = int;

/// Resource limits for constructors and search operations. All limits are
/// explicit arguments so the same inputs always give the same outcome.
struct Caps {
  /// Constructors refuse to build rings larger than this.
  int ring_order = 4096;
  /// Hom-enumeration-based operations refuse modules larger than this.
  int module_order = 64;
  /// Hom enumeration refuses when the projected candidate count exceeds this.
  std::int64_t hom_budget = std::int64_t{1} << 20;
  /// Largest exponent tried when searching progenerator witnesses.
  int summand_power = 3;
};

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: mismatched table dimensions, out-of-range indices,
/// arguments that violate a documented precondition.
class StructureError : public Error {
 public:
  explicit StructureError(const std::string& msg) : Error(msg) {}
};

/// An instance would exceed a configured size cap.
class CapError : public Error {
 public:
  explicit CapError(const std::string& msg) : Error(msg) {}
};

/// A search would exceed a configured candidate budget.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

/// Text input (expression or table file) failed to parse.
/// `offset` is the byte position of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A well-formed request whose arguments do not typecheck (unknown
/// constructor, arity mismatch, module over the wrong ring, ...).
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

namespace detail {

/// order*order table lookup helper.
inline Idx at(const std::vector<Idx>& table, int stride, Idx row, Idx col) {
  return table[static_cast<std::size_t>(row) * stride + col];
}

}  // namespace detail

}  // namespace regulus
