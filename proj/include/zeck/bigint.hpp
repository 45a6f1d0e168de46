#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string_view>

#include "zeck/error.hpp"

namespace zeck {

using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

/// Parses a non-negative decimal integer; rejects signs, blanks and junk.
inline BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw error(errc::parse_error, "empty integer");
  for (char c : text) {
    if (c < '0' || c > '9') throw error(errc::parse_error, "not a non-negative integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

}  // namespace zeck
