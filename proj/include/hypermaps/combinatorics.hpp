#pragma once

#include <vector>

#include "hypermaps/rational.hpp"

namespace hypermaps {

// n!
Rational factorial(unsigned long n);

// (2l+1)!!
Rational double_factorial_odd(unsigned long l);

// Binomial with integer (possibly negative) top: prod_{i<k}(n-i)/k!.
Rational binomial(long n, unsigned long k);

// Binomial with rational top.
Rational binomial(const Rational& a, unsigned long k);

// Rising factorial a(a+1)...(a+len-1); len = 0 gives 1.
Rational pochhammer(const Rational& a, unsigned long len);

// 2^e for any integer e.
Rational pow2(long e);

// All partitions of d into positive parts, each sorted descending.
std::vector<std::vector<int>> partitions_of(int d);

}  // namespace hypermaps
