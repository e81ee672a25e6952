#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polynil {

// Exact arbitrary-precision integer (expression templates off so values behave
// like ordinary ints). Nothing in this library ever touches floating point.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

// A BigInt that is >= 0 by contract of the operation producing it.
using BigCount = BigInt;

std::string to_decimal(const BigInt& value);

// Parses a decimal integer (optional leading '-'); throws std::invalid_argument
// on anything else.
BigInt parse_decimal(const std::string& text);

// Short magnitude hint like "~2.96e9"; empty for values below 10^7.
std::string magnitude_hint(const BigInt& value);

}  // namespace polynil
