#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgasket {

/// Base of every error the library throws for a domain-level failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedCode : public Error {
 public:
  MalformedCode(std::size_t offset, const std::string& what)
      : Error("MalformedCode at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  /// Byte offset of the first violation in the input text.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class NotAJunction : public Error {
 public:
  explicit NotAJunction(const std::string& code) : Error("NotAJunction: " + code) {}
};

class IdenticalCodes : public Error {
 public:
  explicit IdenticalCodes(const std::string& code) : Error("IdenticalCodes: " + code) {}
};

class SamePoint : public Error {
 public:
  SamePoint(const std::string& a, const std::string& b) : Error("SamePoint: " + a + " and " + b) {}
};

class DepthTooSmall : public Error {
 public:
  DepthTooSmall(std::size_t depth, std::size_t split)
      : Error("DepthTooSmall: depth " + std::to_string(depth) + " < split index " + std::to_string(split)) {}
};

class LevelTooLarge : public Error {
 public:
  LevelTooLarge(std::size_t level, std::size_t limit)
      : Error("LevelTooLarge: level " + std::to_string(level) + " outside 1.." + std::to_string(limit)) {}
};

class VertexNotFound : public Error {
 public:
  explicit VertexNotFound(const std::string& vertex) : Error("VertexNotFound: " + vertex) {}
};

}  // namespace sgasket
