#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace crossnest {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);   // 0 outside 0 <= k <= n
BigInt catalan(int m);
BigInt double_factorial_odd(int m);  // (2m-1)!! , value 1 at m = 0

}  // namespace crossnest
