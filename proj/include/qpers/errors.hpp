#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpers {

/// Base of every error raised by the library. `input_error()` separates
/// malformed input (CLI exit 2) from domain failures on valid input (exit 1).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, bool input_error = false)
      : std::runtime_error(what), input_error_(input_error) {}
  bool input_error() const noexcept { return input_error_; }

 private:
  bool input_error_;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what, true) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what, true) {}
};

class CycleError : public Error {
 public:
  explicit CycleError(const std::string& what) : Error(what) {}
};

class PathExplosion : public Error {
 public:
  explicit PathExplosion(std::size_t cap)
      : Error("path enumeration exceeded cap " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Two directed paths with the same endpoints whose composites differ.
/// Each path is a list of edge ids in traversal order.
class CommutativityError : public Error {
 public:
  CommutativityError(const std::string& what, std::string src, std::string dst,
                     std::vector<std::string> first, std::vector<std::string> second)
      : Error(what),
        src_(std::move(src)),
        dst_(std::move(dst)),
        first_(std::move(first)),
        second_(std::move(second)) {}
  const std::string& src() const noexcept { return src_; }
  const std::string& dst() const noexcept { return dst_; }
  const std::vector<std::string>& first_path() const noexcept { return first_; }
  const std::vector<std::string>& second_path() const noexcept { return second_; }

 private:
  std::string src_, dst_;
  std::vector<std::string> first_, second_;
};

class DisconnectedError : public Error {
 public:
  explicit DisconnectedError(const std::string& what) : Error(what) {}
};

class NotSubcomplex : public Error {
 public:
  explicit NotSubcomplex(const std::string& what) : Error(what) {}
};

class NotAChain : public Error {
 public:
  explicit NotAChain(const std::string& what) : Error(what) {}
};

class NotAGrid : public Error {
 public:
  explicit NotAGrid(const std::string& what) : Error(what) {}
};

class NotComparable : public Error {
 public:
  explicit NotComparable(const std::string& what) : Error(what) {}
};

class InvalidSubset : public Error {
 public:
  explicit InvalidSubset(const std::string& what) : Error(what) {}
};

class MissingEdge : public Error {
 public:
  explicit MissingEdge(const std::string& what) : Error(what) {}
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& id) : Error("unknown vertex '" + id + "'", true) {}
};

/// Syntax error in an expression or input file; `position()` is a byte
/// offset for expressions and a 1-based line number for line formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at " + std::to_string(position), true), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qpers
