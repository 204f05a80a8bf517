#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pgog {

using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace pgog
