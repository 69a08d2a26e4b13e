#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ntcodes {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt parse_decimal(const std::string& s) { return BigInt(s); }

inline bool is_zero(const BigInt& v) { return v.is_zero(); }

}  // namespace ntcodes
