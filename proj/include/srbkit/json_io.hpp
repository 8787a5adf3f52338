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

#include <json.hpp>

#include "srbkit/arrangement.hpp"
#include "srbkit/freeness.hpp"
#include "srbkit/srb.hpp"
#include "srbkit/verify.hpp"

namespace srbkit {

using Json = nlohmann::ordered_json;

Json to_json(const Polynomial& p);
Json to_json(const Derivation& d);
Json to_json(const RootSystem& rs);
Json to_json(const AffineArrangement& a);
Json to_json(const CentralArrangement& a);
Json to_json(const MultiArrangement& a);
Json to_json(const FreenessVerdict& v);
Json to_json(const SrbResult& r);
Json to_json(const VerificationReport& r);

Polynomial polynomial_from_json(const Json& j);
Derivation derivation_from_json(const Json& j);
SrbResult srb_result_from_json(const Json& j);

}  // namespace srbkit
