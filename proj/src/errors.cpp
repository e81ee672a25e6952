#include "polynil/errors.hpp"

namespace polynil {

GroupParseError::GroupParseError(std::size_t offset, const std::string& detail)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + detail),
      offset_(offset) {}

}  // namespace polynil
