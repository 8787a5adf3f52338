/*
   Copyright 2026 The srbkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace srbkit {

// All scalar arithmetic in the library is exact. Rationals are kept
// canonical: gcd(num, den) = 1, den > 0, zero is 0/1. GMP maintains this
// for all arithmetic results; parsed values are canonicalized explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed
// input or a zero denominator.
Rational rational_from_string(std::string_view s);

// Renders as "p/q", omitting "/1".
std::string to_string(const Rational& q);

Rational binomial(int n, int k);

}  // namespace srbkit
