#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polynil {

// Thrown when an enumeration or expansion would exceed its element cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a group expression; carries the byte offset of the failure.
class GroupParseError : public std::runtime_error {
 public:
  GroupParseError(std::size_t offset, const std::string& detail);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace polynil
