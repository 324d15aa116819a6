#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgt {

enum class ErrorCode : std::uint8_t {
  InvalidParameter = 1,
  DegreeMismatch,
  CapacityExceeded,
  NotAMember,
  NotNormal,
  Syntax,
  Semantic,
};

const char* to_string(ErrorCode code) noexcept;

/// Library-wide exception. Every failure surfaced by the core carries one of
/// the typed codes above so the C API can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown when an operation would have to enumerate more elements than the
/// configured cap. `required` is the size that would have been needed.
class CapacityError : public Error {
 public:
  CapacityError(std::uint64_t required, std::uint64_t cap);

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// Thrown by the spec parser, for both syntax errors (code Syntax) and
/// out-of-range parameters (code Semantic). `offset` is a byte offset into
/// the parsed text.
class SpecError : public Error {
 public:
  SpecError(ErrorCode code, std::size_t offset, const std::string& message,
            std::vector<std::string> expected = {})
      : Error(code, message), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  /// Tokens that would have been accepted at `offset` (syntax errors only).
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace pgt
