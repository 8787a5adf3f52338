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

#include "srbkit/rational.hpp"

#include <stdexcept>

namespace srbkit {

Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + std::string(s) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace srbkit
