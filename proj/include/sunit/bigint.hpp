#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sunit {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace sunit
