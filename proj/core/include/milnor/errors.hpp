#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnor {

// Base of every error raised by the library. `kind()` is the stable name
// used on the wire (CLI messages, HTTP error bodies).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error("DimensionError", what) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error("ShapeError", what) {}
};

class NotARootError : public Error {
 public:
  explicit NotARootError(const std::string& what) : Error("NotARootError", what) {}
};

class FamilyParamError : public Error {
 public:
  explicit FamilyParamError(const std::string& what) : Error("FamilyParamError", what) {}
};

class NotFiniteTypeError : public Error {
 public:
  explicit NotFiniteTypeError(const std::string& what) : Error("NotFiniteTypeError", what) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error("FormatError", what) {}
};

// Raised by move validation. `position()` is the index of the offending move
// inside a sequence, or the byte offset when raised by the parser.
class MoveRangeError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit MoveRangeError(const std::string& what, std::size_t position = npos)
      : Error("MoveRangeError", what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error("ParseError", what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace milnor
