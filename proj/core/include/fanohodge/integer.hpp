#pragma once

#include <gmpxx.h>

#include <string>

namespace fanohodge {

using Integer = mpz_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace fanohodge
