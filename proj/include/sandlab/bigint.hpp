#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sandlab {

using BigInt = boost::multiprecision::cpp_int;

/// binom(n, k) with binom(n, k) = 0 outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace sandlab
