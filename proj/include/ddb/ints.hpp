#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ddb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a closure/enumeration cap is exceeded (caps are parameters,
// not mathematical statements; exceeding one never certifies infiniteness).
struct LimitError : Error {
  using Error::Error;
};

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int abs(const Int& a) {
  return boost::multiprecision::abs(a);
}

inline long long to_long_checked(const Int& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw Error(std::string(what) + ": value out of machine range");
  }
  return v.convert_to<long long>();
}

}  // namespace ddb
